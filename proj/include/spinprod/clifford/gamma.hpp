#pragma once

#include "spinprod/exact/matrix.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace spinprod::clifford {

using exact::GaussianRational;
using exact::Matrix;

/**
 * Metric signature (p, q): the first p generators square to -1, the last q to +1.
 *
 * Throughout the library the Clifford relation reads
 *     gamma_a gamma_b + gamma_b gamma_a = -2 eta_ab,
 * so eta_aa = +1 for a < p and -1 otherwise. Euclidean means q == 0.
 */
struct Signature {
    int p = 0;
    int q = 0;

    static Signature euclidean(int dim) { return {dim, 0}; }
    int dim() const noexcept { return p + q; }
    /// Diagonal metric entry for generator a (0-based).
    int eta(int a) const noexcept { return a < p ? 1 : -1; }
    std::vector<int> etas() const;

    friend bool operator==(const Signature&, const Signature&) = default;
};

/// Diagonal exact metric matrix diag(eta_0, ..., eta_{D-1}).
Matrix metric_matrix(std::span<const int> etas);

/**
 * Irreducible complex representation of Cl(p, q).
 *
 * `volume` holds the normalized chirality for even dimension and is empty for odd dimension.
 */
struct GammaRep {
    int dim = 0;
    Signature signature;
    std::size_t rep_size = 0;
    std::vector<Matrix> gammas;
    std::optional<Matrix> volume;

    bool is_even() const noexcept { return dim % 2 == 0; }
};

/**
 * Pauli recursion: Cl(2) is seeded with {i s1, i s2}; Cl(2n) -> Cl(2n+2)
 * maps g -> kron(g, s3) and appends kron(I, i s1), kron(I, i s2); odd
 * dimension appends c·g_1···g_2n with c in {1, i} fixed by squaring.
 * The last q generators are then multiplied by i.
 *
 * Throws std::domain_error for dim < 1 or a signature of the wrong size.
 */
GammaRep build_gamma(int dim, Signature sig);
inline GammaRep build_gamma(int dim) { return build_gamma(dim, Signature::euclidean(dim)); }

/// i^k·g_1···g_D with k in {0, 1} chosen so the square is the identity. Works for any generator list.
Matrix normalized_volume(std::span<const Matrix> gammas);

/// The chirality operator of an even-dimensional rep; std::domain_error for odd dim.
Matrix chirality(const GammaRep& rep);

/**
 * First failing pair (a, b), a <= b, of g_a g_b + g_b g_a == -2 metric(a, b)·I,
 * scanning in lexicographic order; nullopt when all relations hold.
 *
 * The pair sweep is spread over OpenMP threads; the reported witness does not depend on scheduling.
 */
std::optional<std::pair<std::size_t, std::size_t>> first_relation_failure(std::span<const Matrix> gammas,
                                                                          const Matrix& metric);

namespace serial {
std::optional<std::pair<std::size_t, std::size_t>> first_relation_failure(std::span<const Matrix> gammas,
                                                                          const Matrix& metric);
}

/// All D² pair relations for the rep's own signature.
bool verify_clifford(const GammaRep& rep);

struct GradingSplit {
    Matrix plus;   ///< columns span the +1 eigenspace of the chirality
    Matrix minus;  ///< columns span the -1 eigenspace
    /// [plus | minus], the change of basis into the graded frame.
    Matrix basis() const { return exact::hstack(plus, minus); }
};

/// Eigenspace bases from pivot columns of (I ± w)/2; std::domain_error for odd dim.
GradingSplit grading_split(const GammaRep& rep);
/// Same split for an arbitrary involution w.
GradingSplit grading_split(const Matrix& w);

}  // namespace spinprod::clifford
