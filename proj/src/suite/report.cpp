#include "spinprod/suite/report.hpp"

#include "spinprod/exact/solve.hpp"
#include "spinprod/graded/product.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <stdexcept>
#include <utility>

namespace spinprod::suite {

using exact::GaussianRational;
using exact::Matrix;
using graded::ProductModule;

namespace {

struct Entry {
    std::string_view name;
    std::string_view claim;
};

constexpr Entry kRegistry[] = {
    {"factor_clifford", "each factor's gamma matrices satisfy g_a g_b + g_b g_a = -2 eta_ab"},
    {"factor_grading", "Clifford multiplication is odd on every graded slot"},
    {"factor_irreducible", "each factor representation has a one-dimensional commutant"},
    {"product_clifford", "(XY + YX) = -2 g(X, Y) on W for the assembled block metric"},
    {"total_rank", "rank of W is 2^(n + N_o)"},
    {"delta_sign", "delta_k acts on homogeneous vectors by (-1)^(eps_1 + ... + eps_{k-1})"},
    {"sign_lemma", "delta_k(X_i Xi) = -delta_k(Xi) for i < k and +delta_k(Xi) for i >= k"},
    {"parity_square", "the unnormalized parity operator squares to N times the identity"},
    {"parity_vs_clifford", "commutation behaviour of the parity operator with Clifford multiplication"},
    {"subspace_literal_closure", "slot-wise diagonal of the chosen odd factors is Clifford-invariant"},
    {"subspace_rank", "spinor subspace S has rank 2^(n + floor(N_o / 2))"},
    {"subspace_closure", "S is invariant under Clifford multiplication"},
    {"subspace_clifford", "restricted action on S satisfies the Clifford relation"},
    {"subspace_irreducible", "restricted action on S has a one-dimensional commutant"},
    {"parity_on_subspace", "whether S is invariant under the parity operator"},
    {"split_equivalence", "for two factors with an even one, S is equivalent to the tensor-split gammas"},
};

std::string pair_witness(std::size_t a, std::size_t b) {
    return "pair (" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")";
}

class Runner {
public:
    explicit Runner(SuiteReport& report) : report_(report) {}

    // fn returns (status, witness).
    void run(std::string_view name, const std::function<std::pair<Status, std::string>()>& fn) {
        (void)claim_of(name);
        const auto t0 = std::chrono::steady_clock::now();
        std::pair<Status, std::string> result;
        try {
            result = fn();
        } catch (const std::exception& e) {
            result = {Status::Fail, std::string("exception: ") + e.what()};
        }
        const auto t1 = std::chrono::steady_clock::now();
        report_.checks.push_back({std::string(name), result.first, std::move(result.second),
                                  std::chrono::duration<double, std::milli>(t1 - t0).count()});
    }

private:
    SuiteReport& report_;
};

std::pair<Status, std::string> verdict(bool ok, std::string witness_on_fail, std::string witness_on_pass = {}) {
    return ok ? std::pair{Status::Pass, std::move(witness_on_pass)} : std::pair{Status::Fail, std::move(witness_on_fail)};
}

// Applies per-factor scaling to a generator list ordered by factor.
std::vector<Matrix> rescale(const std::vector<Matrix>& gammas, const ProductModule& pm) {
    if (!pm.scaling) return gammas;
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < pm.factor_count(); ++i) {
        const Matrix& a = (*pm.scaling)[i];
        const std::size_t off = pm.offset(i);
        for (std::size_t col = 0; col < a.cols(); ++col) {
            Matrix acc(gammas.front().rows(), gammas.front().cols());
            for (std::size_t c = 0; c < a.rows(); ++c) {
                if (!a(c, col).is_zero()) acc += gammas[off + c] * a(c, col);
            }
            out.push_back(std::move(acc));
        }
    }
    return out;
}

std::string relation_word(const Matrix& p, const std::vector<Matrix>& gammas) {
    bool anti = true;
    bool comm = true;
    for (const auto& g : gammas) {
        const Matrix pg = p * g;
        const Matrix gp = g * p;
        if (!(pg + gp).is_zero()) anti = false;
        if (!(pg == gp)) comm = false;
    }
    if (anti) return "anticommutes with every generator";
    if (comm) return "commutes with every generator";
    return "neither commutes nor anticommutes with all generators";
}

}  // namespace

std::string_view to_string(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Info: return "info";
    }
    return "unknown";
}

std::string_view claim_of(std::string_view check_name) {
    for (const auto& e : kRegistry) {
        if (e.name == check_name) return e.claim;
    }
    throw std::out_of_range("unknown check name: " + std::string(check_name));
}

const std::vector<std::string_view>& check_names() {
    static const std::vector<std::string_view> names = [] {
        std::vector<std::string_view> v;
        for (const auto& e : kRegistry) v.push_back(e.name);
        return v;
    }();
    return names;
}

bool SuiteReport::passed() const { return first_failure() == nullptr; }

const Check* SuiteReport::first_failure() const {
    for (const auto& c : checks) {
        if (c.status == Status::Fail) return &c;
    }
    return nullptr;
}

SuiteReport run_product_suite(const std::vector<int>& dims, std::optional<std::vector<std::size_t>> diag_choice,
                              std::optional<std::vector<Matrix>> scaling, std::string scaling_label) {
    SuiteReport report;
    report.config.dims = dims;
    report.config.scaling = std::move(scaling_label);
    if (diag_choice) report.config.diag_choice = *diag_choice;
    Runner runner(report);

    std::vector<graded::GradedFactor> factors;
    for (int d : dims) factors.push_back(graded::make_factor(clifford::build_gamma(d)));

    runner.run("factor_clifford", [&] {
        for (std::size_t i = 0; i < factors.size(); ++i) {
            const auto& rep = factors[i].source;
            const auto fail = clifford::first_relation_failure(rep.gammas,
                                                               clifford::metric_matrix(rep.signature.etas()));
            if (fail) return verdict(false, "factor " + std::to_string(i + 1) + " " + pair_witness(fail->first, fail->second));
        }
        return verdict(true, {});
    });

    runner.run("factor_grading", [&] {
        for (std::size_t i = 0; i < factors.size(); ++i) {
            const auto& f = factors[i];
            for (std::size_t a = 0; a < f.action.size(); ++a) {
                if (!exact::anticommutator(f.action[a], f.grading_op).is_zero()) {
                    return verdict(false, "factor " + std::to_string(i + 1) + " generator " + std::to_string(a + 1));
                }
            }
        }
        return verdict(true, {});
    });

    runner.run("factor_irreducible", [&] {
        for (std::size_t i = 0; i < factors.size(); ++i) {
            const auto& rep = factors[i].source;
            const auto basis = exact::commutant_basis(rep.gammas, rep.rep_size);
            if (basis.size() != 1) {
                return verdict(false, "factor " + std::to_string(i + 1) + " commutant dimension " +
                                          std::to_string(basis.size()));
            }
        }
        return verdict(true, {});
    });

    ProductModule pm;
    try {
        pm = graded::build_product(std::move(factors), std::move(scaling));
    } catch (const std::exception& e) {
        runner.run("product_clifford", [&] { return verdict(false, std::string("construction failed: ") + e.what()); });
        return report;
    }
    report.total_size = pm.total_size;
    const std::size_t n_half = pm.half_dim_sum();
    const std::size_t n_odd = pm.odd_count();
    const std::size_t n_factors = pm.factor_count();

    runner.run("product_clifford", [&] {
        const auto fail = graded::product_relation_failure(pm);
        return verdict(!fail, fail ? pair_witness(fail->first, fail->second) : std::string{});
    });

    runner.run("total_rank", [&] {
        const std::size_t expected = std::size_t{1} << (n_half + n_odd);
        return verdict(pm.total_size == expected,
                       "rank " + std::to_string(pm.total_size) + " expected " + std::to_string(expected),
                       std::to_string(pm.total_size));
    });

    runner.run("delta_sign", [&] {
        for (std::size_t k = 1; k <= n_factors; ++k) {
            const Matrix delta = graded::delta_operator(pm, k);
            for (std::size_t idx = 0; idx < pm.total_size; ++idx) {
                const auto eps = pm.slot_parities(idx);
                const GaussianRational want = graded::delta_sign(k, eps);
                if (!(delta(idx, idx) == want)) {
                    return verdict(false, "k=" + std::to_string(k) + " basis vector " + std::to_string(idx));
                }
            }
            if (!(delta * delta).is_identity()) return verdict(false, "k=" + std::to_string(k) + " not diagonal +-1");
        }
        return verdict(true, {});
    });

    runner.run("sign_lemma", [&] {
        for (std::size_t k = 1; k <= n_factors; ++k) {
            const Matrix delta = graded::delta_operator(pm, k);
            for (std::size_t i = 0; i < n_factors; ++i) {
                const GaussianRational sign = (i + 1 < k) ? -1 : 1;
                for (std::size_t a = 0; a < static_cast<std::size_t>(pm.dims[i]); ++a) {
                    const Matrix& g = pm.gamma_total[pm.offset(i) + a];
                    if (!(delta * g == g * delta * sign)) {
                        return verdict(false, "k=" + std::to_string(k) + " factor " + std::to_string(i + 1) +
                                                  " generator " + std::to_string(a + 1));
                    }
                }
            }
        }
        return verdict(true, {});
    });

    const Matrix parity = graded::build_parity(pm);
    runner.run("parity_square", [&] {
        const GaussianRational n = static_cast<std::int64_t>(n_factors);
        return verdict((parity * parity).is_scalar(n), "square is not " + std::to_string(n_factors) + "*I");
    });

    runner.run("parity_vs_clifford", [&] {
        return std::pair{Status::Info, relation_word(parity, pm.gamma_total)};
    });

    graded::SpinorSubspace sub;
    bool have_sub = false;
    runner.run("subspace_literal_closure", [&] {
        sub = graded::build_subspace(pm, diag_choice);
        have_sub = true;
        report.literal_closed = sub.literal_closed;
        report.subspace_method = sub.method == graded::SubspaceMethod::Literal ? "literal" : "pairwise_fallback";
        report.subspace_rank = sub.rank();
        if (report.config.diag_choice.empty()) report.config.diag_choice = sub.choice;
        return std::pair{Status::Info, sub.literal_closed ? std::string("closed")
                                                          : std::string("not closed; pairwise fallback used")};
    });
    if (!have_sub) return report;

    runner.run("subspace_rank", [&] {
        const std::size_t expected = std::size_t{1} << sub.K;
        const bool ok = sub.K == n_half + n_odd / 2 && sub.rank() == expected &&
                        exact::exact_rank(sub.basis) == expected;
        return verdict(ok, "rank " + std::to_string(sub.rank()) + " expected " + std::to_string(expected),
                       std::to_string(sub.rank()));
    });

    runner.run("subspace_closure", [&] {
        return verdict(sub.closed && graded::spans_invariant(pm.gamma_total, sub.basis),
                       "method " + report.subspace_method, report.subspace_method);
    });

    runner.run("subspace_clifford", [&] {
        if (!sub.closed) return verdict(false, "subspace not closed");
        const auto fail = clifford::first_relation_failure(sub.restricted_gammas, pm.metric());
        return verdict(!fail, fail ? pair_witness(fail->first, fail->second) : std::string{});
    });

    runner.run("subspace_irreducible", [&] {
        if (!sub.closed) return verdict(false, "subspace not closed");
        // Same span as the scaled restriction, with far smaller entries.
        const auto base = graded::restrict_action(pm.gamma_base, sub.basis);
        const auto basis = exact::commutant_basis(base, sub.rank());
        return verdict(basis.size() == 1, "commutant dimension " + std::to_string(basis.size()));
    });

    runner.run("parity_on_subspace", [&] {
        const Matrix p[] = {parity};
        return std::pair{Status::Info, graded::spans_invariant(p, sub.basis) ? std::string("invariant")
                                                                            : std::string("not invariant")};
    });

    const bool has_even = std::any_of(dims.begin(), dims.end(), [](int d) { return d % 2 == 0; });
    if (n_factors == 2 && has_even && sub.closed) {
        runner.run("split_equivalence", [&] {
            // The even factor provides the chirality; generators are compared in product order.
            const std::size_t even_idx = dims[0] % 2 == 0 ? 0 : 1;
            const std::size_t other_idx = 1 - even_idx;
            const auto split = graded::split_gammas(pm.factors[even_idx].source, pm.factors[other_idx].source);
            const std::size_t n_other = static_cast<std::size_t>(dims[other_idx]);
            std::vector<Matrix> ordered;
            if (even_idx == 0) {
                ordered.assign(split.begin() + static_cast<std::ptrdiff_t>(n_other), split.end());
                ordered.insert(ordered.end(), split.begin(), split.begin() + static_cast<std::ptrdiff_t>(n_other));
            } else {
                ordered = split;
            }
            const auto scaled = rescale(ordered, pm);
            const auto fail = clifford::first_relation_failure(scaled, pm.metric());
            if (fail) return verdict(false, "split gammas " + pair_witness(fail->first, fail->second));
            const auto base = graded::restrict_action(pm.gamma_base, sub.basis);
            const auto t = exact::solve_intertwiner(ordered, base, sub.rank());
            if (!t) return verdict(false, "no invertible intertwiner found");
            for (std::size_t a = 0; a < scaled.size(); ++a) {
                if (!(*t * scaled[a] == sub.restricted_gammas[a] * *t)) {
                    return verdict(false, "intertwiner fails on generator " + std::to_string(a + 1));
                }
            }
            return verdict(true, {}, "intertwiner found");
        });
    }
    return report;
}

std::vector<std::vector<int>> compositions(int max_dim, int max_factors) {
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    std::function<void(int)> extend = [&](int remaining) {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        if (static_cast<int>(current.size()) == max_factors) return;
        for (int part = 1; part <= remaining; ++part) {
            current.push_back(part);
            extend(remaining - part);
            current.pop_back();
        }
    };
    for (int total = 1; total <= max_dim; ++total) extend(total);
    return out;
}

std::uint64_t scaling_seed(const std::vector<int>& dims) {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (int d : dims) {
        h ^= static_cast<std::uint64_t>(d);
        h *= 1099511628211ull;
    }
    return h;
}

std::vector<Matrix> random_rational_scaling(const std::vector<int>& dims, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 3);
    std::vector<Matrix> out;
    for (int d : dims) {
        const auto n = static_cast<std::size_t>(d);
        Matrix a(n, n);
        do {
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) a(r, c) = GaussianRational(exact::Rational(num(rng), den(rng)));
        } while (exact::exact_rank(a) != n);
        out.push_back(std::move(a));
    }
    return out;
}

bool SweepReport::passed() const {
    return std::all_of(reports.begin(), reports.end(), [](const SuiteReport& r) { return r.passed(); });
}

SweepReport run_verify_all(int max_dim, int max_factors) {
    SweepReport sweep;
    sweep.max_dim = max_dim;
    sweep.max_factors = max_factors;
    const auto comps = compositions(max_dim, max_factors);
    sweep.reports.resize(2 * comps.size());
    // Slots are preassigned, so the report order is fixed whatever the completion order.
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(sweep.reports.size()); ++k) {
        const auto idx = static_cast<std::size_t>(k);
        const auto& dims = comps[idx / 2];
        if (idx % 2 == 0) {
            sweep.reports[idx] = run_product_suite(dims);
        } else {
            const auto seed = scaling_seed(dims);
            sweep.reports[idx] = run_product_suite(dims, std::nullopt, random_rational_scaling(dims, seed),
                                                   "random(seed=" + std::to_string(seed) + ")");
        }
    }
    return sweep;
}

json to_json(const SuiteReport& report, bool timings) {
    json j;
    j["dims"] = report.config.dims;
    j["scaling"] = report.config.scaling;
    json choice = json::array();
    for (std::size_t i : report.config.diag_choice) choice.push_back(i + 1);
    j["diagonalized"] = std::move(choice);
    j["passed"] = report.passed();
    j["total_size"] = report.total_size;
    j["subspace_rank"] = report.subspace_rank;
    j["literal_closed"] = report.literal_closed;
    j["subspace_method"] = report.subspace_method;
    json checks = json::array();
    for (const auto& c : report.checks) {
        json cj;
        cj["name"] = c.name;
        cj["claim"] = std::string(claim_of(c.name));
        cj["status"] = std::string(to_string(c.status));
        cj["witness"] = c.witness;
        if (timings) cj["elapsed_ms"] = c.elapsed_ms;
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    return j;
}

json to_json(const SweepReport& sweep, bool timings) {
    json j;
    j["max_dim"] = sweep.max_dim;
    j["max_factors"] = sweep.max_factors;
    j["configs"] = sweep.reports.size();
    std::size_t failures = 0;
    std::size_t fallbacks = 0;
    for (const auto& r : sweep.reports) {
        if (!r.passed()) ++failures;
        if (!r.literal_closed) ++fallbacks;
    }
    j["failed_configs"] = failures;
    j["literal_not_closed"] = fallbacks;
    j["passed"] = sweep.passed();
    json reports = json::array();
    for (const auto& r : sweep.reports) reports.push_back(to_json(r, timings));
    j["reports"] = std::move(reports);
    return j;
}

}  // namespace spinprod::suite
