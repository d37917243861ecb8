#include "spinprod/clifford/gamma.hpp"

#include "spinprod/exact/solve.hpp"

#include <stdexcept>
#include <string>

namespace spinprod::clifford {

using exact::kron;
using exact::sigma;

namespace {

std::vector<std::pair<std::size_t, std::size_t>> upper_pairs(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    pairs.reserve(n * (n + 1) / 2);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) pairs.emplace_back(a, b);
    return pairs;
}

bool relation_holds(const Matrix& ga, const Matrix& gb, const GaussianRational& g_ab) {
    return exact::anticommutator(ga, gb).is_scalar(GaussianRational(-2) * g_ab);
}

void require_metric(std::span<const Matrix> gammas, const Matrix& metric) {
    if (metric.rows() != gammas.size() || metric.cols() != gammas.size()) {
        throw exact::ShapeError("relation check: metric is " + std::to_string(metric.rows()) + "x" +
                                std::to_string(metric.cols()) + " for " + std::to_string(gammas.size()) +
                                " generators");
    }
}

}  // namespace

std::vector<int> Signature::etas() const {
    std::vector<int> out(static_cast<std::size_t>(dim()));
    for (int a = 0; a < dim(); ++a) out[static_cast<std::size_t>(a)] = eta(a);
    return out;
}

Matrix metric_matrix(std::span<const int> etas) {
    Matrix m(etas.size(), etas.size());
    for (std::size_t a = 0; a < etas.size(); ++a) m(a, a) = etas[a];
    return m;
}

GammaRep build_gamma(int dim, Signature sig) {
    if (dim < 1) throw std::domain_error("build_gamma: dimension must be at least 1, got " + std::to_string(dim));
    if (sig.p < 0 || sig.q < 0 || sig.dim() != dim) {
        throw std::domain_error("build_gamma: signature (" + std::to_string(sig.p) + "," + std::to_string(sig.q) +
                                ") does not match dimension " + std::to_string(dim));
    }
    const GaussianRational i = GaussianRational::i();
    const int half = dim / 2;

    // Even part: Cl(0) has no generators on C^1.
    std::vector<Matrix> gammas;
    std::size_t size = 1;
    for (int step = 0; step < half; ++step) {
        for (auto& g : gammas) g = kron(g, sigma(3));
        gammas.push_back(kron(Matrix::identity(size), i * sigma(1)));
        gammas.push_back(kron(Matrix::identity(size), i * sigma(2)));
        size *= 2;
    }

    if (dim % 2 == 1) {
        Matrix top = Matrix::identity(size);
        for (const auto& g : gammas) top = top * g;
        // top² is ±I; pick c with (c·top)² == -I.
        const Matrix sq = top * top;
        if (sq.is_scalar(1)) {
            top *= i;
        } else if (!sq.is_scalar(-1)) {
            throw std::logic_error("build_gamma: product of generators does not square to a sign");
        }
        gammas.push_back(std::move(top));
    }

    for (int a = sig.p; a < dim; ++a) gammas[static_cast<std::size_t>(a)] *= i;

    GammaRep rep{dim, sig, size, std::move(gammas), std::nullopt};
    if (rep.is_even()) rep.volume = normalized_volume(rep.gammas);
    return rep;
}

Matrix normalized_volume(std::span<const Matrix> gammas) {
    if (gammas.empty()) throw std::domain_error("normalized_volume: empty generator list");
    Matrix w = gammas.front();
    for (std::size_t a = 1; a < gammas.size(); ++a) w = w * gammas[a];
    const Matrix sq = w * w;
    if (sq.is_scalar(-1)) {
        w *= GaussianRational::i();
    } else if (!sq.is_scalar(1)) {
        throw std::domain_error("normalized_volume: product of generators does not square to a sign");
    }
    return w;
}

Matrix chirality(const GammaRep& rep) {
    if (!rep.is_even()) {
        throw std::domain_error("chirality: dimension " + std::to_string(rep.dim) + " is odd");
    }
    return normalized_volume(rep.gammas);
}

std::optional<std::pair<std::size_t, std::size_t>> first_relation_failure(std::span<const Matrix> gammas,
                                                                          const Matrix& metric) {
    require_metric(gammas, metric);
    const auto pairs = upper_pairs(gammas.size());
    std::vector<char> ok(pairs.size(), 0);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(pairs.size()); ++k) {
        const auto [a, b] = pairs[static_cast<std::size_t>(k)];
        ok[static_cast<std::size_t>(k)] = relation_holds(gammas[a], gammas[b], metric(a, b)) ? 1 : 0;
    }
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        if (!ok[k]) return pairs[k];
    }
    return std::nullopt;
}

namespace serial {

std::optional<std::pair<std::size_t, std::size_t>> first_relation_failure(std::span<const Matrix> gammas,
                                                                          const Matrix& metric) {
    require_metric(gammas, metric);
    for (std::size_t a = 0; a < gammas.size(); ++a) {
        for (std::size_t b = a; b < gammas.size(); ++b) {
            const Matrix lhs = exact::serial::mat_mul(gammas[a], gammas[b]) +
                               exact::serial::mat_mul(gammas[b], gammas[a]);
            if (!(lhs == Matrix::identity(lhs.rows()) * (GaussianRational(-2) * metric(a, b)))) {
                return std::pair{a, b};
            }
        }
    }
    return std::nullopt;
}

}  // namespace serial

bool verify_clifford(const GammaRep& rep) {
    if (rep.gammas.size() != static_cast<std::size_t>(rep.dim)) return false;
    for (const auto& g : rep.gammas) {
        if (g.rows() != rep.rep_size || g.cols() != rep.rep_size) return false;
    }
    const auto etas = rep.signature.etas();
    if (etas.size() != rep.gammas.size()) return false;
    return !first_relation_failure(rep.gammas, metric_matrix(etas)).has_value();
}

GradingSplit grading_split(const Matrix& w) {
    if (!w.is_square()) throw exact::ShapeError("grading_split: operator is not square");
    const std::size_t n = w.rows();
    const Matrix id = Matrix::identity(n);
    const GaussianRational half = GaussianRational(exact::Rational(1, 2));
    const Matrix proj_plus = (id + w) * half;
    const Matrix proj_minus = (id - w) * half;

    auto column_basis = [n](const Matrix& proj) {
        const auto piv = exact::pivot_columns(proj);
        Matrix basis(n, piv.size());
        for (std::size_t c = 0; c < piv.size(); ++c)
            for (std::size_t r = 0; r < n; ++r) basis(r, c) = proj(r, piv[c]);
        return basis;
    };
    return {column_basis(proj_plus), column_basis(proj_minus)};
}

GradingSplit grading_split(const GammaRep& rep) {
    if (!rep.is_even()) {
        throw std::domain_error("grading_split: dimension " + std::to_string(rep.dim) + " is odd");
    }
    return grading_split(rep.volume ? *rep.volume : chirality(rep));
}

}  // namespace spinprod::clifford
