#include "spinprod/graded/product.hpp"

#include "spinprod/exact/solve.hpp"
#include "slot.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace spinprod::graded {

using exact::kron;

namespace {

// [I; I]: the diagonal {(x, x)} of a doubled slot.
Matrix diagonal_embedding(std::size_t slot_size) {
    const std::size_t half = slot_size / 2;
    return kron(Matrix{{1}, {1}}, Matrix::identity(half));
}

}  // namespace

void validate_diag_choice(std::span<const int> dims, std::span<const std::size_t> choice) {
    std::size_t odd = 0;
    for (int d : dims) odd += static_cast<std::size_t>(d % 2);
    const std::size_t want = odd - odd / 2;
    if (choice.size() != want) {
        throw std::domain_error("build_subspace: expected " + std::to_string(want) +
                                " diagonalized odd factors, got " + std::to_string(choice.size()));
    }
    std::set<std::size_t> seen;
    for (std::size_t i : choice) {
        if (i >= dims.size()) {
            throw std::domain_error("build_subspace: factor index " + std::to_string(i + 1) + " out of range");
        }
        if (dims[i] % 2 == 0) {
            throw std::domain_error("build_subspace: factor " + std::to_string(i + 1) + " is even-dimensional");
        }
        if (!seen.insert(i).second) {
            throw std::domain_error("build_subspace: factor " + std::to_string(i + 1) + " chosen twice");
        }
    }
}

std::vector<std::size_t> default_diag_choice(const ProductModule& pm) {
    const std::size_t odd = pm.odd_count();
    std::size_t want = odd - odd / 2;
    std::vector<std::size_t> choice;
    for (std::size_t i = pm.factor_count(); i-- > 0 && want > 0;) {
        if (pm.dims[i] % 2 == 1) {
            choice.push_back(i);
            --want;
        }
    }
    std::reverse(choice.begin(), choice.end());
    return choice;
}

Matrix diagonal_basis(const ProductModule& pm, std::span<const std::size_t> choice) {
    std::vector<Matrix> parts;
    for (std::size_t i = 0; i < pm.factor_count(); ++i) {
        const std::size_t size = pm.factors[i].slot_size;
        const bool chosen = std::find(choice.begin(), choice.end(), i) != choice.end();
        parts.push_back(chosen ? diagonal_embedding(size) : Matrix::identity(size));
    }
    return kron(parts);
}

bool spans_invariant(std::span<const Matrix> ops, const Matrix& basis) {
    const Matrix proj = basis * exact::left_inverse(basis);
    for (const auto& op : ops) {
        const Matrix image = op * basis;
        if (!(proj * image == image)) return false;
    }
    return true;
}

std::vector<Matrix> restrict_action(std::span<const Matrix> ops, const Matrix& basis) {
    const Matrix left = exact::left_inverse(basis);
    std::vector<Matrix> out;
    out.reserve(ops.size());
    for (const auto& op : ops) out.push_back(left * op * basis);
    return out;
}

GeneratorSet pairwise_compose(const GeneratorSet& first, const GeneratorSet& second) {
    const bool first_odd = first.gammas.size() % 2 == 1;
    const bool second_odd = second.gammas.size() % 2 == 1;
    if (first_odd && !second_odd) {
        // Only the last slot may be diagonalized, so build (even, odd) and move first's generators back to the front.
        GeneratorSet swapped = pairwise_compose(second, first);
        const auto n2 = static_cast<std::ptrdiff_t>(second.gammas.size());
        std::rotate(swapped.gammas.begin(), swapped.gammas.begin() + n2, swapped.gammas.end());
        std::rotate(swapped.etas.begin(), swapped.etas.begin() + n2, swapped.etas.end());
        return swapped;
    }

    std::vector<detail::Slot> slots{detail::make_slot(first.gammas), detail::make_slot(second.gammas)};
    std::vector<std::vector<Matrix>> actions{slots[0].action, slots[1].action};
    const auto gammas = detail::assemble_gammas(slots, actions);

    const Matrix basis = second_odd ? kron(Matrix::identity(slots[0].size), diagonal_embedding(slots[1].size))
                                    : Matrix::identity(slots[0].size * slots[1].size);
    if (!spans_invariant(gammas, basis)) {
        throw std::logic_error("pairwise_compose: diagonal of the last odd slot is not invariant");
    }

    GeneratorSet out;
    out.gammas = restrict_action(gammas, basis);
    out.etas = first.etas;
    out.etas.insert(out.etas.end(), second.etas.begin(), second.etas.end());
    return out;
}

GeneratorSet compose_all(const ProductModule& pm) {
    auto set_of = [](const GradedFactor& f) {
        return GeneratorSet{f.source.gammas, f.source.signature.etas()};
    };
    GeneratorSet acc = set_of(pm.factors.front());
    for (std::size_t i = 1; i < pm.factor_count(); ++i) acc = pairwise_compose(acc, set_of(pm.factors[i]));
    return acc;
}

SpinorSubspace build_subspace(const ProductModule& pm, std::optional<std::vector<std::size_t>> diag_choice) {
    SpinorSubspace sub;
    sub.choice = diag_choice ? std::move(*diag_choice) : default_diag_choice(pm);
    validate_diag_choice(pm.dims, sub.choice);
    std::sort(sub.choice.begin(), sub.choice.end());
    sub.K = pm.half_dim_sum() + pm.odd_count() / 2;

    const Matrix literal = diagonal_basis(pm, sub.choice);
    sub.literal_closed = spans_invariant(pm.gamma_base, literal);
    if (sub.literal_closed) {
        sub.method = SubspaceMethod::Literal;
        sub.basis = literal;
        sub.closed = true;
        sub.restricted_gammas = restrict_action(pm.gamma_total, literal);
        return sub;
    }

    // Fallback: build the irreducible rep pairwise, then locate a copy of it inside W.
    sub.method = SubspaceMethod::PairwiseFallback;
    // Scaling mixes both sides by the same A_i, so unscaled intertwiners serve.
    const GeneratorSet composed = compose_all(pm);
    const auto homs = exact::hom_space(composed.gammas, pm.gamma_base);
    auto embedding = exact::full_rank_combination(homs);
    if (!embedding) {
        sub.closed = false;
        sub.basis = Matrix(pm.total_size, 0);
        return sub;
    }
    sub.basis = std::move(*embedding);
    sub.closed = spans_invariant(pm.gamma_total, sub.basis);
    if (sub.closed) sub.restricted_gammas = restrict_action(pm.gamma_total, sub.basis);
    return sub;
}

}  // namespace spinprod::graded
