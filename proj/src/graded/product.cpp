#include "spinprod/graded/product.hpp"

#include "spinprod/exact/solve.hpp"
#include "slot.hpp"

#include <stdexcept>
#include <string>

namespace spinprod::graded {

using exact::kron;

namespace detail {

Slot make_slot(std::span<const Matrix> gammas, const std::optional<Matrix>& volume) {
    if (gammas.empty()) throw std::domain_error("make_slot: factor has no generators");
    const std::size_t size = gammas.front().rows();
    Slot slot;
    if (gammas.size() % 2 == 0) {
        const Matrix w = volume ? *volume : clifford::normalized_volume(gammas);
        const auto split = clifford::grading_split(w);
        const std::size_t half = split.plus.cols();
        if (half * 2 != size || split.minus.cols() != half) {
            throw std::logic_error("make_slot: chirality eigenspaces are unbalanced");
        }
        const Matrix basis = split.basis();
        const Matrix basis_inv = exact::inverse(basis);
        for (const auto& g : gammas) slot.action.push_back(basis_inv * g * basis);
        slot.grading = kron(exact::sigma(3), Matrix::identity(half));
        slot.swap = kron(exact::sigma(1), Matrix::identity(half));
        slot.size = size;
    } else {
        for (const auto& g : gammas) slot.action.push_back(kron(exact::sigma(1), g));
        slot.grading = kron(exact::sigma(3), Matrix::identity(size));
        slot.swap = kron(exact::sigma(1), Matrix::identity(size));
        slot.size = 2 * size;
    }
    return slot;
}

std::vector<Matrix> assemble_gammas(std::span<const Slot> slots, std::span<const std::vector<Matrix>> actions) {
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < slots.size(); ++i) {
        for (const auto& m : actions[i]) {
            std::vector<Matrix> parts;
            parts.reserve(slots.size());
            for (std::size_t j = 0; j < slots.size(); ++j) {
                if (j < i) {
                    parts.push_back(slots[j].grading);
                } else if (j == i) {
                    parts.push_back(m);
                } else {
                    parts.push_back(Matrix::identity(slots[j].size));
                }
            }
            out.push_back(kron(parts));
        }
    }
    return out;
}

Matrix slot_kron(std::span<const Slot> slots, std::size_t at, const Matrix& op, bool graded_prefix) {
    std::vector<Matrix> parts;
    parts.reserve(slots.size());
    for (std::size_t j = 0; j < slots.size(); ++j) {
        if (j == at) {
            parts.push_back(op);
        } else if (j < at && graded_prefix) {
            parts.push_back(slots[j].grading);
        } else {
            parts.push_back(Matrix::identity(slots[j].size));
        }
    }
    return kron(parts);
}

}  // namespace detail

namespace {

std::vector<detail::Slot> slots_of(const ProductModule& pm) {
    std::vector<detail::Slot> slots;
    for (const auto& f : pm.factors) slots.push_back({f.slot_size, f.action, f.grading_op, f.swap});
    return slots;
}

// m_i(A e_a) = sum_c A(c, a)·action_c.
std::vector<Matrix> scaled_action(std::span<const Matrix> action, const Matrix& a) {
    std::vector<Matrix> out;
    for (std::size_t col = 0; col < action.size(); ++col) {
        Matrix acc(action.front().rows(), action.front().cols());
        for (std::size_t c = 0; c < action.size(); ++c) {
            if (!a(c, col).is_zero()) acc += action[c] * a(c, col);
        }
        out.push_back(std::move(acc));
    }
    return out;
}

void validate_scaling(const std::vector<GradedFactor>& factors, const std::vector<Matrix>& scaling) {
    if (scaling.size() != factors.size()) {
        throw std::domain_error("build_product: expected " + std::to_string(factors.size()) +
                                " scaling matrices, got " + std::to_string(scaling.size()));
    }
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const auto d = static_cast<std::size_t>(factors[i].source.dim);
        const Matrix& a = scaling[i];
        if (a.rows() != d || a.cols() != d) {
            throw std::domain_error("build_product: scaling block " + std::to_string(i + 1) + " must be " +
                                    std::to_string(d) + "x" + std::to_string(d));
        }
        for (const auto& z : a.entries()) {
            if (!z.is_real()) throw std::domain_error("build_product: scaling entries must be real rationals");
        }
        if (exact::exact_rank(a) != d) {
            throw std::domain_error("build_product: scaling block " + std::to_string(i + 1) + " is singular");
        }
    }
}

}  // namespace

GradedFactor make_factor(const GammaRep& rep) {
    auto slot = detail::make_slot(rep.gammas, rep.volume);
    GradedFactor f;
    f.source = rep;
    f.slot_size = slot.size;
    f.parity_vector.assign(slot.size, 1);
    for (std::size_t k = slot.size / 2; k < slot.size; ++k) f.parity_vector[k] = -1;
    f.action = std::move(slot.action);
    f.grading_op = std::move(slot.grading);
    f.swap = std::move(slot.swap);
    return f;
}

int delta_sign(std::size_t k, std::span<const int> eps) {
    if (k < 1 || k > eps.size()) {
        throw std::domain_error("delta_sign: k = " + std::to_string(k) + " outside 1.." + std::to_string(eps.size()));
    }
    int sum = 0;
    for (std::size_t j = 0; j < eps.size(); ++j) {
        if (eps[j] != 0 && eps[j] != 1) throw std::domain_error("delta_sign: parity labels must be 0 or 1");
        if (j + 1 < k) sum += eps[j];
    }
    return sum % 2 == 0 ? 1 : -1;
}

std::size_t ProductModule::odd_count() const noexcept {
    std::size_t n = 0;
    for (int d : dims) n += static_cast<std::size_t>(d % 2);
    return n;
}

std::size_t ProductModule::half_dim_sum() const noexcept {
    std::size_t n = 0;
    for (int d : dims) n += static_cast<std::size_t>(d / 2);
    return n;
}

std::size_t ProductModule::offset(std::size_t factor) const {
    if (factor > dims.size()) throw std::out_of_range("ProductModule::offset");
    std::size_t off = 0;
    for (std::size_t i = 0; i < factor; ++i) off += static_cast<std::size_t>(dims[i]);
    return off;
}

Matrix ProductModule::metric() const {
    std::vector<Matrix> blocks;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        Matrix eta = clifford::metric_matrix(factors[i].source.signature.etas());
        if (scaling) {
            const Matrix& a = (*scaling)[i];
            eta = a.transpose() * eta * a;
        }
        blocks.push_back(std::move(eta));
    }
    return exact::direct_sum(blocks);
}

std::vector<int> ProductModule::slot_parities(std::size_t index) const {
    if (index >= total_size) throw std::out_of_range("ProductModule::slot_parities");
    std::vector<int> eps(factors.size());
    for (std::size_t j = factors.size(); j-- > 0;) {
        const std::size_t digit = index % factors[j].slot_size;
        index /= factors[j].slot_size;
        eps[j] = factors[j].parity_vector[digit] == 1 ? 0 : 1;
    }
    return eps;
}

ProductModule build_product(std::vector<GradedFactor> factors, std::optional<std::vector<Matrix>> scaling) {
    if (factors.empty()) throw std::domain_error("build_product: no factors");
    if (scaling) validate_scaling(factors, *scaling);

    ProductModule pm;
    pm.total_size = 1;
    std::vector<detail::Slot> slots;
    std::vector<std::vector<Matrix>> actions;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const auto& f = factors[i];
        pm.dims.push_back(f.source.dim);
        pm.total_size *= f.slot_size;
        slots.push_back({f.slot_size, f.action, f.grading_op, f.swap});
        actions.push_back(scaling ? scaled_action(f.action, (*scaling)[i]) : f.action);
    }
    pm.gamma_total = detail::assemble_gammas(slots, actions);
    if (scaling) {
        std::vector<std::vector<Matrix>> base;
        for (const auto& f : factors) base.push_back(f.action);
        pm.gamma_base = detail::assemble_gammas(slots, base);
    } else {
        pm.gamma_base = pm.gamma_total;
    }

    pm.parity_total.assign(pm.total_size, 1);
    for (std::size_t idx = 0; idx < pm.total_size; ++idx) {
        std::size_t rest = idx;
        int sign = 1;
        for (std::size_t j = factors.size(); j-- > 0;) {
            sign *= factors[j].parity_vector[rest % factors[j].slot_size];
            rest /= factors[j].slot_size;
        }
        pm.parity_total[idx] = sign;
    }

    pm.factors = std::move(factors);
    pm.scaling = std::move(scaling);
    return pm;
}

ProductModule build_product(std::span<const int> dims, std::optional<std::vector<Matrix>> scaling) {
    std::vector<GradedFactor> factors;
    for (int d : dims) factors.push_back(make_factor(clifford::build_gamma(d)));
    return build_product(std::move(factors), std::move(scaling));
}

Matrix delta_operator(const ProductModule& pm, std::size_t k) {
    if (k < 1 || k > pm.factor_count()) {
        throw std::domain_error("delta_operator: k = " + std::to_string(k) + " outside 1.." +
                                std::to_string(pm.factor_count()));
    }
    const auto slots = slots_of(pm);
    return detail::slot_kron(slots, k - 1, Matrix::identity(slots[k - 1].size), true);
}

std::optional<std::pair<std::size_t, std::size_t>> product_relation_failure(const ProductModule& pm) {
    return clifford::first_relation_failure(pm.gamma_total, pm.metric());
}

bool verify_product_clifford(const ProductModule& pm) { return !product_relation_failure(pm).has_value(); }

Matrix build_parity(const ProductModule& pm) {
    const auto slots = slots_of(pm);
    Matrix total(pm.total_size, pm.total_size);
    for (std::size_t i = 0; i < slots.size(); ++i) total += detail::slot_kron(slots, i, slots[i].swap, true);
    return total;
}

std::vector<Matrix> split_gammas(const GammaRep& even_rep, const GammaRep& other_rep) {
    if (!even_rep.is_even()) {
        throw std::domain_error("split_gammas: first rep has odd dimension " + std::to_string(even_rep.dim));
    }
    const Matrix w = even_rep.volume ? *even_rep.volume : clifford::chirality(even_rep);
    std::vector<Matrix> out;
    for (const auto& g : other_rep.gammas) out.push_back(kron(g, w));
    const Matrix id = Matrix::identity(other_rep.rep_size);
    for (const auto& g : even_rep.gammas) out.push_back(kron(id, g));
    return out;
}

}  // namespace spinprod::graded
