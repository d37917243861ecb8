#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace spinprod::frames {

using Mat = Eigen::MatrixXd;

inline constexpr double kSpdTolerance = 1e-10;
inline constexpr double kSymmetryTolerance = 1e-12;
inline constexpr double kFrameTolerance = 1e-10;
inline constexpr double kMaxCondition = 1e12;

/**
 * Metric data at a single point of a product with block metric
 * g|_{TM_i} = A_i^T g_i A_i. Blocks of different factors are orthogonal.
 */
struct PointFrame {
    std::vector<int> dims;
    std::vector<Mat> g_blocks;
    std::vector<Mat> a_blocks;
    Mat g_total;
};

/// Throws std::domain_error for mismatched sizes, a non-SPD g_i or an ill-conditioned A_i.
PointFrame assemble_metric(std::vector<Mat> g_blocks, std::vector<Mat> a_blocks);

/// Block-diagonal frame with blocks A_i^{-1} E_i; each E_i must satisfy E_i^T g_i E_i = I.
Mat product_frame(const std::vector<Mat>& factor_frames, const PointFrame& pf);

/// max |F^T g_total F - I|.
double frame_residual(const Mat& frame, const Mat& metric);

/// E = L^{-T} for g = L L^T, a g-orthonormal frame.
Mat orthonormal_frame(const Mat& g);

/**
 * Point on R × S^3 with metric alpha(r) dr² + h_r, realized as dims (1, 3),
 * g_1 = [1], A_1 = [sqrt(alpha(r))], g_2 = I (round seed) and A_2 the upper
 * Cholesky factor of h_scale(r), so A_2^T A_2 = h_scale(r).
 */
PointFrame eguchi_sample(double r, const std::function<double(double)>& alpha,
                         const std::function<Mat(double)>& h_scale);

/// alpha(r) = 1 / (1 - r^-4).
double eguchi_hanson_alpha(double r);
/// h_r = diag(r²/4, r²/4, r²/4 · (1 - r^-4)).
Mat eguchi_hanson_fibre(double r);

/// Seeded random SPD g_i and well-conditioned A_i for the given dims.
PointFrame random_point_frame(const std::vector<int>& dims, std::mt19937_64& rng);

}  // namespace spinprod::frames
