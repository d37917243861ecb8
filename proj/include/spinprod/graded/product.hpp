#pragma once

#include "spinprod/clifford/gamma.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace spinprod::graded {

using clifford::GammaRep;
using exact::GaussianRational;
using exact::Matrix;

/**
 * One factor of the product, carried as a Z2-graded slot.
 *
 * Basis order inside the slot is always (even half, odd half). For an
 * even-dimensional source the halves are the chirality eigenspaces; for an
 * odd-dimensional source the slot is the doubled space S ⊕ ΠS with action
 * [[0, g], [g, 0]].
 */
struct GradedFactor {
    GammaRep source;
    std::size_t slot_size = 0;
    std::vector<int> parity_vector;  ///< +1 / -1 per slot basis vector
    std::vector<Matrix> action;      ///< block-antidiagonal Clifford action
    Matrix grading_op;               ///< diag(+1, ..., -1, ...)
    Matrix swap;                     ///< exchanges the two halves: [[0, I], [I, 0]]

    bool doubled() const noexcept { return !source.is_even(); }
};

GradedFactor make_factor(const GammaRep& rep);

/// Koszul sign (-1)^(eps_1 + ... + eps_{k-1}); k is 1-based, eps entries are 0 or 1.
int delta_sign(std::size_t k, std::span<const int> eps);

/**
 * The graded tensor product W of all factor slots with the product Clifford action.
 *
 * Generator a of factor i acts as kron(G_1, ..., G_{i-1}, m_i(A_i e_a), I, ..., I),
 * where G_j are grading operators and m_i is the factor's action extended linearly.
 */
struct ProductModule {
    std::vector<GradedFactor> factors;
    std::size_t total_size = 0;
    std::vector<int> dims;
    std::vector<Matrix> gamma_total;
    /// Generators before scaling; equal to gamma_total when unscaled. Spans the same space.
    std::vector<Matrix> gamma_base;
    std::vector<int> parity_total;
    std::optional<std::vector<Matrix>> scaling;

    std::size_t factor_count() const noexcept { return factors.size(); }
    std::size_t odd_count() const noexcept;
    /// n = sum of floor(D_i / 2).
    std::size_t half_dim_sum() const noexcept;
    std::size_t total_dim() const noexcept { return gamma_total.size(); }
    /// Index of factor i's first generator in gamma_total.
    std::size_t offset(std::size_t factor) const;
    /// Block-diagonal metric with blocks A_i^T eta_i A_i.
    Matrix metric() const;
    /// Parity label (0 even, 1 odd) of each slot for W basis vector `index`.
    std::vector<int> slot_parities(std::size_t index) const;
};

/// Throws std::domain_error when a scaling block is missing, mis-sized, complex or singular.
ProductModule build_product(std::vector<GradedFactor> factors,
                            std::optional<std::vector<Matrix>> scaling = std::nullopt);
/// Convenience: Euclidean factors of the given dimensions.
ProductModule build_product(std::span<const int> dims, std::optional<std::vector<Matrix>> scaling = std::nullopt);

/// delta_k as an operator: kron(G_1, ..., G_{k-1}, I, ..., I); k is 1-based.
Matrix delta_operator(const ProductModule& pm, std::size_t k);

std::optional<std::pair<std::size_t, std::size_t>> product_relation_failure(const ProductModule& pm);
bool verify_product_clifford(const ProductModule& pm);

/**
 * Unnormalized parity operator sum_i kron(G_1, ..., G_{i-1}, swap_i, I, ..., I).
 *
 * Its square is N·I. Dividing by sqrt(N) would leave the Gaussian rationals,
 * so the normalization is left to the caller.
 */
Matrix build_parity(const ProductModule& pm);

enum class SubspaceMethod { Literal, PairwiseFallback };

struct SpinorSubspace {
    Matrix basis;  ///< total_size × 2^K, full column rank
    std::size_t K = 0;
    std::vector<std::size_t> choice;  ///< diagonalized factors, 0-based
    bool literal_closed = false;      ///< verdict for the slot-wise diagonal span
    SubspaceMethod method = SubspaceMethod::Literal;
    bool closed = false;  ///< verdict for `basis`
    std::vector<Matrix> restricted_gammas;

    std::size_t rank() const noexcept { return basis.cols(); }
};

/// The last ceil(N_o / 2) odd factors.
std::vector<std::size_t> default_diag_choice(const ProductModule& pm);

/// Throws std::domain_error unless `choice` names exactly ceil(N_o/2) distinct odd factors (0-based).
void validate_diag_choice(std::span<const int> dims, std::span<const std::size_t> choice);

/// kron over slots of I (kept) or [I; I] (diagonalized).
Matrix diagonal_basis(const ProductModule& pm, std::span<const std::size_t> choice);

/// True iff every op maps the column span of `basis` into itself.
bool spans_invariant(std::span<const Matrix> ops, const Matrix& basis);

/// L·op·B for each op, with L the left inverse of `basis`.
std::vector<Matrix> restrict_action(std::span<const Matrix> ops, const Matrix& basis);

/**
 * Spinor subspace of W of rank 2^(n + floor(N_o/2)).
 *
 * First tries the slot-wise diagonal of the chosen odd factors and verifies
 * closure exactly. If closure fails, composes the factors two at a time
 * with the two-factor construction, rescales, and embeds the result into W
 * through an exact intertwiner. `literal_closed` always records the first verdict.
 *
 * Throws std::domain_error for a malformed diag_choice.
 */
SpinorSubspace build_subspace(const ProductModule& pm,
                              std::optional<std::vector<std::size_t>> diag_choice = std::nullopt);

/// Generators with their diagonal metric entries.
struct GeneratorSet {
    std::vector<Matrix> gammas;
    std::vector<int> etas;
};

/**
 * Irreducible rep of the direct sum from two irreducible reps, via the
 * two-factor graded product and the diagonal of the last odd slot.
 *
 * An (odd, even) pair is built in (even, odd) order and the generators are
 * permuted back, so the output keeps `first`'s generators first.
 */
GeneratorSet pairwise_compose(const GeneratorSet& first, const GeneratorSet& second);

/// Left fold of pairwise_compose over the factors' source reps (unscaled).
GeneratorSet compose_all(const ProductModule& pm);

/**
 * Tensor-split gammas: kron(g_a, w) for each generator of `other_rep`,
 * followed by kron(I, g_alpha) for each generator of `even_rep`, where w is
 * the chirality of `even_rep`.
 */
std::vector<Matrix> split_gammas(const GammaRep& even_rep, const GammaRep& other_rep);

}  // namespace spinprod::graded
