#include "spinprod/exact/solve.hpp"
#include "spinprod/graded/product.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace spinprod;
using clifford::build_gamma;
using exact::GaussianRational;
using exact::kron;
using exact::Matrix;
using exact::Rational;
using exact::sigma;

namespace {

const GaussianRational I = GaussianRational::i();

graded::ProductModule product_of(std::vector<int> dims, std::optional<std::vector<Matrix>> scaling = std::nullopt) {
    return graded::build_product(std::span<const int>(dims), std::move(scaling));
}

std::size_t pow2(std::size_t k) { return std::size_t{1} << k; }

}  // namespace

TEST(MakeFactor, DimensionOneIsDoubled) {
    const auto f = graded::make_factor(build_gamma(1));
    EXPECT_TRUE(f.doubled());
    EXPECT_EQ(f.slot_size, 2u);
    EXPECT_EQ(f.parity_vector, (std::vector<int>{1, -1}));
    ASSERT_EQ(f.action.size(), 1u);
    EXPECT_EQ(f.action[0], (Matrix{{0, I}, {I, 0}}));
    EXPECT_EQ(f.grading_op, sigma(3));
    EXPECT_EQ(f.swap, sigma(1));
}

TEST(MakeFactor, DimensionTwoUsesChiralityBasis) {
    // Chirality is s3 already, so the basis change is trivial.
    const auto f = graded::make_factor(build_gamma(2));
    EXPECT_FALSE(f.doubled());
    EXPECT_EQ(f.slot_size, 2u);
    EXPECT_EQ(f.action[0], I * sigma(1));
    EXPECT_EQ(f.action[1], I * sigma(2));
    EXPECT_EQ(f.grading_op, sigma(3));
}

TEST(MakeFactor, DimensionThreeSlotIsFourWide) {
    const auto rep = build_gamma(3);
    const auto f = graded::make_factor(rep);
    EXPECT_EQ(f.slot_size, 4u);
    EXPECT_EQ(f.parity_vector, (std::vector<int>{1, 1, -1, -1}));
    for (std::size_t a = 0; a < 3; ++a) {
        EXPECT_EQ(f.action[a], kron(sigma(1), rep.gammas[a]));
        EXPECT_TRUE(exact::anticommutator(f.action[a], f.grading_op).is_zero());
    }
}

TEST(DeltaSign, Examples) {
    const std::vector<int> eps{1, 0, 1};
    EXPECT_EQ(graded::delta_sign(1, eps), 1);
    EXPECT_EQ(graded::delta_sign(2, eps), -1);
    EXPECT_EQ(graded::delta_sign(3, eps), -1);
    const std::vector<int> two{1, 1, 0};
    EXPECT_EQ(graded::delta_sign(3, two), 1);
}

TEST(DeltaSign, RejectsBadInput) {
    const std::vector<int> eps{0, 1};
    EXPECT_THROW(graded::delta_sign(0, eps), std::domain_error);
    EXPECT_THROW(graded::delta_sign(3, eps), std::domain_error);
    const std::vector<int> bad{2, 0};
    EXPECT_THROW(graded::delta_sign(2, bad), std::domain_error);
}

TEST(Product, TwoEvenFactorsByHand) {
    const auto pm = product_of({2, 2});
    ASSERT_EQ(pm.total_size, 4u);
    ASSERT_EQ(pm.gamma_total.size(), 4u);
    // Assembled by hand from the two-slot rule.
    EXPECT_EQ(pm.gamma_total[0], kron(I * sigma(1), Matrix::identity(2)));
    EXPECT_EQ(pm.gamma_total[1], kron(I * sigma(2), Matrix::identity(2)));
    EXPECT_EQ(pm.gamma_total[2], kron(sigma(3), I * sigma(1)));
    EXPECT_EQ(pm.gamma_total[3], kron(sigma(3), I * sigma(2)));
    EXPECT_TRUE(graded::verify_product_clifford(pm));
}

TEST(Product, AllOnesRanks) {
    for (std::size_t n = 1; n <= 6; ++n) {
        const auto pm = product_of(std::vector<int>(n, 1));
        EXPECT_EQ(pm.total_size, pow2(n));
        EXPECT_TRUE(graded::verify_product_clifford(pm)) << n;
    }
}

TEST(Product, ScaledMetricEntry) {
    std::vector<Matrix> scaling{Matrix{{2, 0}, {0, 1}}, Matrix::identity(2)};
    const auto pm = product_of({2, 2}, scaling);
    EXPECT_EQ(pm.metric()(0, 0), GaussianRational(4));
    EXPECT_TRUE((pm.gamma_total[0] * pm.gamma_total[0]).is_scalar(-4));
    EXPECT_TRUE(graded::verify_product_clifford(pm));
}

TEST(Product, ZeroedGeneratorIsCaught) {
    auto pm = product_of({2, 3});
    pm.gamma_total[3] = Matrix(pm.total_size, pm.total_size);
    const auto fail = graded::product_relation_failure(pm);
    ASSERT_TRUE(fail.has_value());
    EXPECT_EQ(*fail, (std::pair<std::size_t, std::size_t>{3, 3}));
}

TEST(Product, RandomScalingKeepsRelation) {
    std::mt19937 rng(2);
    std::uniform_int_distribution<int> num(-3, 3);
    for (const auto& dims : std::vector<std::vector<int>>{{1, 2}, {2, 3}, {3, 1, 2}}) {
        std::vector<Matrix> scaling;
        for (int d : dims) {
            const auto n = static_cast<std::size_t>(d);
            Matrix a(n, n);
            do {
                for (std::size_t r = 0; r < n; ++r)
                    for (std::size_t c = 0; c < n; ++c) a(r, c) = GaussianRational(Rational(num(rng), 2));
            } while (exact::exact_rank(a) != n);
            scaling.push_back(a);
        }
        const auto pm = product_of(dims, scaling);
        EXPECT_TRUE(graded::verify_product_clifford(pm));
    }
}

TEST(Product, BadScalingThrows) {
    EXPECT_THROW(product_of({2, 2}, std::vector<Matrix>{Matrix::identity(2)}), std::domain_error);
    EXPECT_THROW(product_of({2}, std::vector<Matrix>{Matrix::identity(3)}), std::domain_error);
    EXPECT_THROW(product_of({2}, std::vector<Matrix>{Matrix{{1, 0}, {0, I}}}), std::domain_error);
    EXPECT_THROW(product_of({2}, std::vector<Matrix>{Matrix{{1, 2}, {2, 4}}}), std::domain_error);
}

TEST(DeltaOperator, MatchesSignFormula) {
    const auto pm = product_of({1, 2, 3});
    for (std::size_t k = 1; k <= 3; ++k) {
        const Matrix delta = graded::delta_operator(pm, k);
        for (std::size_t idx = 0; idx < pm.total_size; ++idx) {
            // Slot parities from the row index, computed independently of slot_parities.
            std::vector<int> eps;
            std::size_t rest = idx;
            std::size_t stride = pm.total_size;
            for (const auto& f : pm.factors) {
                stride /= f.slot_size;
                const std::size_t local = rest / stride;
                rest %= stride;
                eps.push_back(local >= f.slot_size / 2 ? 1 : 0);
            }
            EXPECT_EQ(delta(idx, idx), GaussianRational(graded::delta_sign(k, eps)));
        }
    }
}

TEST(DeltaOperator, SignLemma) {
    const auto pm = product_of({2, 1, 3});
    for (std::size_t k = 1; k <= 3; ++k) {
        const Matrix delta = graded::delta_operator(pm, k);
        for (std::size_t i = 0; i < 3; ++i) {
            for (int a = 0; a < pm.dims[i]; ++a) {
                const Matrix& g = pm.gamma_total[pm.offset(i) + static_cast<std::size_t>(a)];
                if (i + 1 < k) {
                    EXPECT_EQ(delta * g, -(g * delta));
                } else {
                    EXPECT_EQ(delta * g, g * delta);
                }
            }
        }
    }
}

TEST(Parity, TwoOnesByHand) {
    const auto pm = product_of({1, 1});
    const Matrix expected = kron(sigma(1), Matrix::identity(2)) + kron(sigma(3), sigma(1));
    const Matrix p = graded::build_parity(pm);
    EXPECT_EQ(p, expected);
    EXPECT_TRUE((p * p).is_scalar(2));
}

TEST(Parity, ThreeOnesByHand) {
    const auto pm = product_of({1, 1, 1});
    const Matrix id = Matrix::identity(2);
    const Matrix expected = kron(kron(sigma(1), id), id) + kron(kron(sigma(3), sigma(1)), id) +
                            kron(kron(sigma(3), sigma(3)), sigma(1));
    const Matrix p = graded::build_parity(pm);
    EXPECT_EQ(p, expected);
    EXPECT_TRUE((p * p).is_scalar(3));
}

TEST(Subspace, RanksForSmallProducts) {
    struct Case {
        std::vector<int> dims;
        std::size_t rank;
    };
    for (const auto& c : std::vector<Case>{{{2, 2}, 4}, {{2, 3}, 4}, {{3, 3}, 8}, {{1, 1, 1}, 2}, {{1, 2}, 2}}) {
        const auto pm = product_of(c.dims);
        const auto sub = graded::build_subspace(pm);
        EXPECT_EQ(sub.rank(), c.rank);
        EXPECT_EQ(exact::exact_rank(sub.basis), c.rank);
        EXPECT_TRUE(sub.closed);
        ASSERT_EQ(sub.restricted_gammas.size(), pm.gamma_total.size());
        // Restriction reproduces the action on the span: G·B == B·r(G).
        for (std::size_t a = 0; a < pm.gamma_total.size(); ++a) {
            EXPECT_EQ(pm.gamma_total[a] * sub.basis, sub.basis * sub.restricted_gammas[a]);
        }
        EXPECT_EQ(exact::commutant_basis(sub.restricted_gammas, sub.rank()).size(), 1u);
    }
}

TEST(Subspace, LiteralDiagonalVerdicts) {
    EXPECT_TRUE(graded::build_subspace(product_of({2, 3})).literal_closed);
    EXPECT_TRUE(graded::build_subspace(product_of({3, 3})).literal_closed);
    const auto odd_even = graded::build_subspace(product_of({3, 2}));
    EXPECT_FALSE(odd_even.literal_closed);
    EXPECT_EQ(odd_even.method, graded::SubspaceMethod::PairwiseFallback);
    EXPECT_TRUE(odd_even.closed);
    const auto ones = graded::build_subspace(product_of({1, 1, 1}));
    EXPECT_FALSE(ones.literal_closed);
    EXPECT_TRUE(ones.closed);
}

TEST(Subspace, LiteralBasisIsTheSlotDiagonal) {
    const auto pm = product_of({2, 1});
    const Matrix expected = kron(Matrix::identity(2), Matrix{{1}, {1}});
    EXPECT_EQ(graded::diagonal_basis(pm, std::vector<std::size_t>{1}), expected);
}

TEST(Subspace, BadChoiceThrows) {
    const auto pm = product_of({2, 3, 3, 1});
    EXPECT_THROW(graded::build_subspace(pm, std::vector<std::size_t>{0, 1}), std::domain_error);
    EXPECT_THROW(graded::build_subspace(pm, std::vector<std::size_t>{1, 1}), std::domain_error);
    EXPECT_THROW(graded::build_subspace(pm, std::vector<std::size_t>{1}), std::domain_error);
    EXPECT_THROW(graded::build_subspace(pm, std::vector<std::size_t>{1, 9}), std::domain_error);
    EXPECT_NO_THROW(graded::build_subspace(pm, std::vector<std::size_t>{1, 3}));
}

TEST(SplitGammas, EvenTwoWithOne) {
    const auto even = build_gamma(2);
    const auto other = build_gamma(1);
    const auto split = graded::split_gammas(even, other);
    ASSERT_EQ(split.size(), 3u);
    EXPECT_EQ(split[0], kron(Matrix{{I}}, sigma(3)));
    EXPECT_EQ(split[1], kron(Matrix::identity(1), I * sigma(1)));
    const Matrix eye = clifford::metric_matrix(std::vector<int>{1, 1, 1});
    EXPECT_FALSE(clifford::serial::first_relation_failure(split, eye).has_value());
}

TEST(SplitGammas, MixedPairsAnticommute) {
    for (int d1 : {2, 4}) {
        for (int d2 : {1, 2, 3}) {
            const auto even = build_gamma(d1);
            const auto other = build_gamma(d2);
            const auto split = graded::split_gammas(even, other);
            const auto n2 = static_cast<std::size_t>(d2);
            for (std::size_t a = 0; a < n2; ++a)
                for (std::size_t b = n2; b < split.size(); ++b)
                    EXPECT_TRUE(exact::anticommutator(split[a], split[b]).is_zero()) << d1 << "," << d2;
            const Matrix eye = clifford::metric_matrix(std::vector<int>(split.size(), 1));
            EXPECT_FALSE(clifford::first_relation_failure(split, eye).has_value());
        }
    }
}

TEST(SplitGammas, EquivalentToSubspaceAction) {
    const auto pm = product_of({2, 2});
    const auto sub = graded::build_subspace(pm);
    const auto split = graded::split_gammas(pm.factors[0].source, pm.factors[1].source);
    // Product order: the even factor's generators first.
    std::vector<Matrix> ordered(split.begin() + 2, split.end());
    ordered.insert(ordered.end(), split.begin(), split.begin() + 2);
    const auto t = exact::solve_intertwiner(ordered, sub.restricted_gammas, sub.rank());
    ASSERT_TRUE(t.has_value());
    for (std::size_t a = 0; a < ordered.size(); ++a) EXPECT_EQ(*t * ordered[a], sub.restricted_gammas[a] * *t);
}

TEST(PairwiseCompose, OddEvenKeepsGeneratorOrder) {
    const auto three = build_gamma(3);
    const auto two = build_gamma(2);
    const graded::GeneratorSet a{three.gammas, three.signature.etas()};
    const graded::GeneratorSet b{two.gammas, two.signature.etas()};
    const auto out = graded::pairwise_compose(a, b);
    ASSERT_EQ(out.gammas.size(), 5u);
    EXPECT_EQ(out.gammas.front().rows(), 4u);
    EXPECT_FALSE(clifford::first_relation_failure(out.gammas, clifford::metric_matrix(out.etas)).has_value());
    EXPECT_EQ(exact::commutant_basis(out.gammas, 4).size(), 1u);
}

TEST(ProductRelation, ParallelMatchesSerial) {
    const auto pm = product_of({2, 1, 3});
    const auto serial = clifford::serial::first_relation_failure(pm.gamma_total, pm.metric());
    EXPECT_EQ(graded::product_relation_failure(pm), serial);
    EXPECT_FALSE(serial.has_value());
}
