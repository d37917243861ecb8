#pragma once

#include "spinprod/exact/matrix.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace spinprod::exact {

/// Sparse linear form: (unknown index, coefficient) pairs sorted by index, no zeros.
using SparseRow = std::vector<std::pair<std::size_t, GaussianRational>>;

/// Sorts by index, merges duplicate indices and drops zero coefficients.
SparseRow canonicalize(SparseRow row);

/**
 * Incremental row-echelon form of a homogeneous linear system.
 *
 * Each stored row is monic in its leading (smallest) unknown and no two rows
 * share a leading unknown. Sparse equations stay sparse, which matters for
 * the commutant systems where every equation has two terms.
 */
class RowEchelon {
public:
    explicit RowEchelon(std::size_t unknowns) : unknowns_(unknowns) {}

    /// Reduces `row` against the stored rows; keeps it if independent. Returns true when kept.
    bool insert(SparseRow row);

    std::size_t unknowns() const noexcept { return unknowns_; }
    std::size_t rank() const noexcept { return pivots_.size(); }
    /// Leading unknowns of the stored rows, increasing.
    std::vector<std::size_t> pivot_indices() const;

    /// Basis of the solution space, one vector per free unknown, in increasing order of the free unknown.
    std::vector<std::vector<GaussianRational>> nullspace() const;

private:
    std::size_t unknowns_;
    std::map<std::size_t, SparseRow> pivots_;
};

std::size_t exact_rank(const Matrix& m);

/// Indices of the pivot columns of m, in increasing order.
std::vector<std::size_t> pivot_columns(const Matrix& m);

/// Exact inverse via Gauss-Jordan; throws std::domain_error if m is singular.
Matrix inverse(const Matrix& m);

/// (B^H B)^{-1} B^H for a full-column-rank B.
Matrix left_inverse(const Matrix& b);

/**
 * Basis of {T : T·A_k == B_k·T for all k}, with A_k of size n×n and B_k of
 * size m×m, so every T is m×n.
 */
std::vector<Matrix> hom_space(std::span<const Matrix> gens_a, std::span<const Matrix> gens_b);

/// Basis of {M : M·G == G·M for every G in gens}; all gens square of size dim.
std::vector<Matrix> commutant_basis(std::span<const Matrix> gens, std::size_t dim);

/**
 * Searches the span of `basis` for an element of full column rank.
 *
 * Candidates are tried in a fixed order: each basis element on its own, then
 * the combinations with coefficients (t+1)^j for t = 0, 1, ..., then
 * pseudo-random integer combinations from a fixed seed. Returns nullopt once
 * `budget` candidates of each kind are exhausted.
 */
std::optional<Matrix> full_rank_combination(std::span<const Matrix> basis, std::size_t budget = 32);

/**
 * An invertible T with T·gens_a[k] == gens_b[k]·T for every k, or nullopt if
 * none was found within the search budget.
 */
std::optional<Matrix> solve_intertwiner(std::span<const Matrix> gens_a, std::span<const Matrix> gens_b,
                                        std::size_t dim);

}  // namespace spinprod::exact
