#pragma once

// Shared by product.cpp and subspace.cpp; not part of the public surface.

#include "spinprod/exact/matrix.hpp"

#include <optional>
#include <span>
#include <vector>

namespace spinprod::graded::detail {

using exact::Matrix;

struct Slot {
    std::size_t size = 0;
    std::vector<Matrix> action;
    Matrix grading;
    Matrix swap;
};

/// Graded slot for a generator list: chirality split when even, doubling when odd.
Slot make_slot(std::span<const Matrix> gammas, const std::optional<Matrix>& volume = std::nullopt);

/// Operator form of the product action: actions[i] are placed in slot i behind the preceding gradings.
std::vector<Matrix> assemble_gammas(std::span<const Slot> slots, std::span<const std::vector<Matrix>> actions);

/// kron with `op` at slot `at`, gradings before it when graded_prefix, identities elsewhere.
Matrix slot_kron(std::span<const Slot> slots, std::size_t at, const Matrix& op, bool graded_prefix);

}  // namespace spinprod::graded::detail
