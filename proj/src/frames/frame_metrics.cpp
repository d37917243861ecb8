#include "spinprod/frames/frame_metrics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace spinprod::frames {

namespace {

void require_spd(const Mat& g, std::size_t i) {
    if (g.rows() != g.cols()) throw std::domain_error("metric block " + std::to_string(i + 1) + " is not square");
    const double scale = std::max(1.0, g.cwiseAbs().maxCoeff());
    if ((g - g.transpose()).cwiseAbs().maxCoeff() > kSymmetryTolerance * scale) {
        throw std::domain_error("metric block " + std::to_string(i + 1) + " is not symmetric");
    }
    Eigen::SelfAdjointEigenSolver<Mat> eig(g);
    if (eig.eigenvalues().minCoeff() <= kSpdTolerance) {
        throw std::domain_error("metric block " + std::to_string(i + 1) + " is not positive definite");
    }
}

void require_invertible(const Mat& a, std::size_t i) {
    Eigen::JacobiSVD<Mat> svd(a);
    const auto& s = svd.singularValues();
    const double smin = s(s.size() - 1);
    if (smin == 0.0 || s(0) / smin >= kMaxCondition) {
        throw std::domain_error("scaling block " + std::to_string(i + 1) + " is singular or ill-conditioned");
    }
}

}  // namespace

PointFrame assemble_metric(std::vector<Mat> g_blocks, std::vector<Mat> a_blocks) {
    if (g_blocks.empty() || g_blocks.size() != a_blocks.size()) {
        throw std::domain_error("assemble_metric: need one scaling block per metric block");
    }
    PointFrame pf;
    Eigen::Index total = 0;
    for (std::size_t i = 0; i < g_blocks.size(); ++i) {
        require_spd(g_blocks[i], i);
        if (a_blocks[i].rows() != g_blocks[i].rows() || a_blocks[i].cols() != g_blocks[i].cols()) {
            throw std::domain_error("assemble_metric: block " + std::to_string(i + 1) + " sizes differ");
        }
        require_invertible(a_blocks[i], i);
        pf.dims.push_back(static_cast<int>(g_blocks[i].rows()));
        total += g_blocks[i].rows();
    }

    pf.g_total = Mat::Zero(total, total);
    Eigen::Index off = 0;
    for (std::size_t i = 0; i < g_blocks.size(); ++i) {
        const Eigen::Index d = g_blocks[i].rows();
        pf.g_total.block(off, off, d, d) = a_blocks[i].transpose() * g_blocks[i] * a_blocks[i];
        off += d;
    }
    pf.g_blocks = std::move(g_blocks);
    pf.a_blocks = std::move(a_blocks);
    return pf;
}

Mat product_frame(const std::vector<Mat>& factor_frames, const PointFrame& pf) {
    if (factor_frames.size() != pf.g_blocks.size()) {
        throw std::domain_error("product_frame: need one frame per factor");
    }
    const auto total = pf.g_total.rows();
    Mat frame = Mat::Zero(total, total);
    Eigen::Index off = 0;
    for (std::size_t i = 0; i < factor_frames.size(); ++i) {
        const Mat& e = factor_frames[i];
        const Eigen::Index d = pf.g_blocks[i].rows();
        if (e.rows() != d || e.cols() != d) {
            throw std::domain_error("product_frame: frame " + std::to_string(i + 1) + " has the wrong size");
        }
        if (frame_residual(e, pf.g_blocks[i]) > kFrameTolerance) {
            throw std::domain_error("product_frame: frame " + std::to_string(i + 1) + " is not orthonormal");
        }
        frame.block(off, off, d, d) = pf.a_blocks[i].partialPivLu().solve(e);
        off += d;
    }
    return frame;
}

double frame_residual(const Mat& frame, const Mat& metric) {
    const Mat gram = frame.transpose() * metric * frame;
    return (gram - Mat::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
}

Mat orthonormal_frame(const Mat& g) {
    Eigen::LLT<Mat> llt(g);
    if (llt.info() != Eigen::Success) throw std::domain_error("orthonormal_frame: metric is not positive definite");
    const Mat l = llt.matrixL();
    return l.transpose().triangularView<Eigen::Upper>().solve(Mat::Identity(g.rows(), g.cols()));
}

PointFrame eguchi_sample(double r, const std::function<double(double)>& alpha,
                         const std::function<Mat(double)>& h_scale) {
    const double a = alpha(r);
    if (!(a > 0.0) || !std::isfinite(a)) {
        throw std::domain_error("eguchi_sample: alpha(r) must be positive, got " + std::to_string(a));
    }
    const Mat h = h_scale(r);
    if (h.rows() != 3 || h.cols() != 3) throw std::domain_error("eguchi_sample: h_scale(r) must be 3x3");
    Eigen::LLT<Mat> llt(h);
    if (llt.info() != Eigen::Success) throw std::domain_error("eguchi_sample: h_scale(r) is not positive definite");
    const Mat upper = llt.matrixU();

    std::vector<Mat> g{Mat::Identity(1, 1), Mat::Identity(3, 3)};
    std::vector<Mat> scal{Mat::Constant(1, 1, std::sqrt(a)), upper};
    return assemble_metric(std::move(g), std::move(scal));
}

double eguchi_hanson_alpha(double r) { return 1.0 / (1.0 - std::pow(r, -4.0)); }

Mat eguchi_hanson_fibre(double r) {
    const double q = r * r / 4.0;
    Mat h = Mat::Zero(3, 3);
    h(0, 0) = q;
    h(1, 1) = q;
    h(2, 2) = q * (1.0 - std::pow(r, -4.0));
    return h;
}

PointFrame random_point_frame(const std::vector<int>& dims, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    auto random = [&](int d) {
        Mat m(d, d);
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) m(r, c) = u(rng);
        return m;
    };
    std::vector<Mat> g, a;
    for (int d : dims) {
        const Mat m = random(d);
        g.push_back(m.transpose() * m + 0.5 * Mat::Identity(d, d));
        a.push_back(random(d) + 4.0 * Mat::Identity(d, d));
    }
    return assemble_metric(std::move(g), std::move(a));
}

}  // namespace spinprod::frames
