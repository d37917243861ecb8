#include "spinprod/exact/solve.hpp"

#include <algorithm>
#include <random>

namespace spinprod::exact {

namespace {

// row - f·pivot, both canonical.
SparseRow subtract_scaled(const SparseRow& row, const GaussianRational& f, const SparseRow& pivot) {
    SparseRow out;
    out.reserve(row.size() + pivot.size());
    auto a = row.begin();
    auto b = pivot.begin();
    while (a != row.end() || b != pivot.end()) {
        if (b == pivot.end() || (a != row.end() && a->first < b->first)) {
            out.push_back(*a++);
        } else if (a == row.end() || b->first < a->first) {
            out.emplace_back(b->first, -(f * b->second));
            ++b;
        } else {
            GaussianRational v = a->second - f * b->second;
            if (!v.is_zero()) out.emplace_back(a->first, std::move(v));
            ++a;
            ++b;
        }
    }
    return out;
}

SparseRow sparse_row(const Matrix& m, std::size_t r) {
    SparseRow row;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (!m(r, c).is_zero()) row.emplace_back(c, m(r, c));
    }
    return row;
}

Matrix reshape(const std::vector<GaussianRational>& v, std::size_t rows, std::size_t cols) {
    return {rows, cols, v};
}

}  // namespace

SparseRow canonicalize(SparseRow row) {
    std::stable_sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    SparseRow out;
    out.reserve(row.size());
    for (auto& [idx, coef] : row) {
        if (!out.empty() && out.back().first == idx) {
            out.back().second += coef;
        } else {
            out.emplace_back(idx, std::move(coef));
        }
    }
    std::erase_if(out, [](const auto& e) { return e.second.is_zero(); });
    return out;
}

bool RowEchelon::insert(SparseRow row) {
    row = canonicalize(std::move(row));
    if (!row.empty() && row.back().first >= unknowns_) {
        throw ShapeError("RowEchelon::insert: unknown index out of range");
    }
    while (!row.empty()) {
        const std::size_t lead = row.front().first;
        auto it = pivots_.find(lead);
        if (it == pivots_.end()) {
            const GaussianRational inv = GaussianRational(1) / row.front().second;
            for (auto& e : row) e.second *= inv;
            pivots_.emplace(lead, std::move(row));
            return true;
        }
        const GaussianRational f = row.front().second;
        row = subtract_scaled(row, f, it->second);
    }
    return false;
}

std::vector<std::size_t> RowEchelon::pivot_indices() const {
    std::vector<std::size_t> out;
    out.reserve(pivots_.size());
    for (const auto& [lead, row] : pivots_) out.push_back(lead);
    return out;
}

std::vector<std::vector<GaussianRational>> RowEchelon::nullspace() const {
    std::vector<std::vector<GaussianRational>> basis;
    for (std::size_t free = 0; free < unknowns_; ++free) {
        if (pivots_.contains(free)) continue;
        std::vector<GaussianRational> x(unknowns_);
        x[free] = 1;
        // Every stored row only mentions unknowns above its lead, so solve top-down from the last pivot.
        for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
            GaussianRational acc;
            for (std::size_t e = 1; e < it->second.size(); ++e) {
                const auto& [idx, coef] = it->second[e];
                if (!x[idx].is_zero()) acc -= coef * x[idx];
            }
            x[it->first] = std::move(acc);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

std::size_t exact_rank(const Matrix& m) {
    RowEchelon ech(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        ech.insert(sparse_row(m, r));
        if (ech.rank() == m.cols()) break;
    }
    return ech.rank();
}

std::vector<std::size_t> pivot_columns(const Matrix& m) {
    RowEchelon ech(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) ech.insert(sparse_row(m, r));
    return ech.pivot_indices();
}

Matrix inverse(const Matrix& m) {
    if (!m.is_square()) throw ShapeError("inverse: matrix is not square");
    const std::size_t n = m.rows();
    Matrix a = m;
    Matrix inv = Matrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a(piv, col).is_zero()) ++piv;
        if (piv == n) throw std::domain_error("inverse: matrix is singular");
        if (piv != col) {
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(a(piv, c), a(col, c));
                std::swap(inv(piv, c), inv(col, c));
            }
        }
        const GaussianRational s = GaussianRational(1) / a(col, col);
        for (std::size_t c = 0; c < n; ++c) {
            if (!a(col, c).is_zero()) a(col, c) *= s;
            if (!inv(col, c).is_zero()) inv(col, c) *= s;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a(r, col).is_zero()) continue;
            const GaussianRational f = a(r, col);
            for (std::size_t c = 0; c < n; ++c) {
                if (!a(col, c).is_zero()) a(r, c) -= f * a(col, c);
                if (!inv(col, c).is_zero()) inv(r, c) -= f * inv(col, c);
            }
        }
    }
    return inv;
}

Matrix left_inverse(const Matrix& b) {
    const Matrix bh = b.adjoint();
    return inverse(bh * b) * bh;
}

std::vector<Matrix> hom_space(std::span<const Matrix> gens_a, std::span<const Matrix> gens_b) {
    if (gens_a.size() != gens_b.size()) throw ShapeError("hom_space: generator lists differ in length");
    if (gens_a.empty()) throw ShapeError("hom_space: sizes are undetermined without generators");
    const std::size_t n = gens_a.front().rows();
    const std::size_t m = gens_b.front().rows();
    for (std::size_t k = 0; k < gens_a.size(); ++k) {
        if (gens_a[k].rows() != n || gens_a[k].cols() != n || gens_b[k].rows() != m || gens_b[k].cols() != m) {
            throw ShapeError("hom_space: generators must be square and uniformly sized");
        }
    }

    // Unknown T(r, c) is index r·n + c. Equation (i, j): sum_l T(i,l)A(l,j) - sum_l B(i,l)T(l,j) = 0.
    RowEchelon ech(m * n);
    for (std::size_t k = 0; k < gens_a.size(); ++k) {
        const Matrix& a = gens_a[k];
        const Matrix& b = gens_b[k];
        std::vector<SparseRow> a_cols(n);
        for (std::size_t l = 0; l < n; ++l)
            for (std::size_t j = 0; j < n; ++j)
                if (!a(l, j).is_zero()) a_cols[j].emplace_back(l, a(l, j));
        std::vector<SparseRow> b_rows(m);
        for (std::size_t i = 0; i < m; ++i) b_rows[i] = sparse_row(b, i);

        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                SparseRow eq;
                for (const auto& [l, v] : a_cols[j]) eq.emplace_back(i * n + l, v);
                for (const auto& [l, v] : b_rows[i]) eq.emplace_back(l * n + j, -v);
                if (!eq.empty()) ech.insert(std::move(eq));
            }
        }
        if (ech.rank() == m * n) return {};
    }

    std::vector<Matrix> basis;
    for (const auto& v : ech.nullspace()) basis.push_back(reshape(v, m, n));
    return basis;
}

std::vector<Matrix> commutant_basis(std::span<const Matrix> gens, std::size_t dim) {
    if (gens.empty()) {
        std::vector<Matrix> units;
        for (std::size_t r = 0; r < dim; ++r) {
            for (std::size_t c = 0; c < dim; ++c) {
                Matrix e(dim, dim);
                e(r, c) = 1;
                units.push_back(std::move(e));
            }
        }
        return units;
    }
    for (const auto& g : gens) {
        if (g.rows() != dim || g.cols() != dim) throw ShapeError("commutant_basis: generator size mismatch");
    }
    return hom_space(gens, gens);
}

std::optional<Matrix> full_rank_combination(std::span<const Matrix> basis, std::size_t budget) {
    if (basis.empty()) return std::nullopt;
    const std::size_t rows = basis.front().rows();
    const std::size_t cols = basis.front().cols();
    if (cols > rows) return std::nullopt;
    auto full_rank = [cols](const Matrix& t) { return exact_rank(t) == cols; };

    for (std::size_t j = 0; j < std::min(basis.size(), budget); ++j) {
        if (full_rank(basis[j])) return basis[j];
    }
    if (basis.size() == 1) return std::nullopt;

    for (std::size_t t = 0; t < budget; ++t) {
        Matrix cand(rows, cols);
        GaussianRational coef = 1;
        const GaussianRational step = static_cast<std::int64_t>(t + 1);
        for (const auto& b : basis) {
            cand += b * coef;
            coef *= step;
        }
        if (full_rank(cand)) return cand;
    }

    std::mt19937 rng(0x5eedu);
    std::uniform_int_distribution<int> coef_dist(-16, 16);
    for (std::size_t t = 0; t < budget; ++t) {
        Matrix cand(rows, cols);
        for (const auto& b : basis) {
            const int c = coef_dist(rng);
            if (c != 0) cand += b * GaussianRational(c);
        }
        if (full_rank(cand)) return cand;
    }
    return std::nullopt;
}

std::optional<Matrix> solve_intertwiner(std::span<const Matrix> gens_a, std::span<const Matrix> gens_b,
                                        std::size_t dim) {
    if (gens_a.size() != gens_b.size()) throw ShapeError("solve_intertwiner: generator lists differ in length");
    for (std::size_t k = 0; k < gens_a.size(); ++k) {
        if (gens_a[k].rows() != dim || gens_a[k].cols() != dim || gens_b[k].rows() != dim ||
            gens_b[k].cols() != dim) {
            throw ShapeError("solve_intertwiner: generator size mismatch");
        }
    }
    if (std::equal(gens_a.begin(), gens_a.end(), gens_b.begin())) return Matrix::identity(dim);
    const auto space = hom_space(gens_a, gens_b);
    return full_rank_combination(space);
}

}  // namespace spinprod::exact
