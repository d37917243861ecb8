#pragma once

#include "spinprod/exact/matrix.hpp"
#include "spinprod/suite/serialize.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace spinprod::suite {

enum class Status { Pass, Fail, Info };

std::string_view to_string(Status s);

struct Check {
    std::string name;
    Status status = Status::Pass;
    std::string witness;  ///< offending index for failures, observation for Info
    double elapsed_ms = 0.0;
};

/// The algebraic claim a check name stands for; throws std::out_of_range for unknown names.
std::string_view claim_of(std::string_view check_name);
/// Every registered check name, in report order.
const std::vector<std::string_view>& check_names();

struct SuiteConfig {
    std::vector<int> dims;
    std::string scaling = "identity";  ///< "identity", "random(seed=...)" or "file"
    std::vector<std::size_t> diag_choice;  ///< 0-based; empty means default
};

struct SuiteReport {
    SuiteConfig config;
    std::vector<Check> checks;
    std::size_t total_size = 0;
    std::size_t subspace_rank = 0;
    bool literal_closed = false;
    std::string subspace_method;

    bool passed() const;
    /// First failing check, if any.
    const Check* first_failure() const;
};

/**
 * Build W for `dims` and run every check: factor reps, product Clifford
 * relation, rank bookkeeping, delta operators and sign lemma, parity square,
 * spinor subspace (rank, closure, restricted relation, irreducibility), and
 * for N == 2 with an even factor the equivalence with the tensor-split gammas.
 */
SuiteReport run_product_suite(const std::vector<int>& dims,
                              std::optional<std::vector<std::size_t>> diag_choice = std::nullopt,
                              std::optional<std::vector<exact::Matrix>> scaling = std::nullopt,
                              std::string scaling_label = "identity");

/// All compositions of 1..max_dim into at most max_factors positive parts, by total then lexicographically.
std::vector<std::vector<int>> compositions(int max_dim, int max_factors);

/// Seed derived from the dims only, so a config's scaling does not depend on sweep order.
std::uint64_t scaling_seed(const std::vector<int>& dims);

/// Invertible D_i × D_i matrices with entries p/q, |p| <= 3, 1 <= q <= 3.
std::vector<exact::Matrix> random_rational_scaling(const std::vector<int>& dims, std::uint64_t seed);

struct SweepReport {
    int max_dim = 0;
    int max_factors = 0;
    std::vector<SuiteReport> reports;

    bool passed() const;
};

/// Every composition, once with identity scaling and once with seeded random scaling.
SweepReport run_verify_all(int max_dim, int max_factors = 4);

json to_json(const SuiteReport& report, bool timings = false);
json to_json(const SweepReport& sweep, bool timings = false);

}  // namespace spinprod::suite
