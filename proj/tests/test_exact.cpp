#include "spinprod/exact/matrix.hpp"
#include "spinprod/exact/solve.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace spinprod::exact;

namespace {

const GaussianRational I = GaussianRational::i();

Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, bool allow_zero_rows = true) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    std::uniform_int_distribution<int> sparse(0, 3);
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            if (allow_zero_rows && sparse(rng) == 0) continue;
            m(r, c) = GaussianRational(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
        }
    }
    return m;
}

}  // namespace

TEST(GaussianRational, NormalFormAndArithmetic) {
    const auto half = GaussianRational::from_parts(2, 4, -3, -6);
    EXPECT_EQ(half, GaussianRational(Rational(1, 2), Rational(1, 2)));
    EXPECT_EQ(I * I, GaussianRational(-1));
    EXPECT_EQ((GaussianRational(1) + I) * (GaussianRational(1) - I), GaussianRational(2));
    EXPECT_EQ(GaussianRational(1) / I, -I);
    EXPECT_EQ(GaussianRational(3) / GaussianRational(6), GaussianRational(Rational(1, 2)));
    EXPECT_THROW(GaussianRational::from_parts(1, 0, 0, 1), std::domain_error);
    EXPECT_THROW(GaussianRational(1) / GaussianRational(0), std::domain_error);
    EXPECT_EQ(GaussianRational(Rational(-1, 2), Rational(3, 4)).to_string(), "-1/2+3/4i");
    EXPECT_EQ((-I).to_string(), "-i");
}

TEST(MatMul, IdentityAndInvolution) {
    const Matrix m{{1, I}, {Rational(1, 2), -3}};
    EXPECT_EQ(Matrix::identity(2) * m, m);
    EXPECT_TRUE((sigma(1) * sigma(1)).is_identity());
}

TEST(MatMul, ProductOfImaginaryPaulis) {
    // Hand multiplication: (i s1)(i s2) = -s1 s2 = -[[i, 0], [0, -i]].
    const Matrix expected{{-I, 0}, {0, I}};
    EXPECT_EQ((I * sigma(1)) * (I * sigma(2)), expected);
    EXPECT_EQ(expected, -(I * sigma(3)));
}

TEST(MatMul, ShapeMismatchThrows) {
    EXPECT_THROW(Matrix(2, 3) * Matrix(2, 3), ShapeError);
    EXPECT_THROW(serial::mat_mul(Matrix(2, 3), Matrix(2, 3)), ShapeError);
    EXPECT_THROW(Matrix(2, 2) + Matrix(3, 3), ShapeError);
}

TEST(MatMul, ParallelMatchesSerialReference) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 5; ++trial) {
        const Matrix a = random_matrix(rng, 40, 33);
        const Matrix b = random_matrix(rng, 33, 37);
        EXPECT_EQ(mat_mul(a, b), serial::mat_mul(a, b));
    }
}

TEST(MatMul, AssociativeOnRandomTriples) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const Matrix a = random_matrix(rng, 3, 4);
        const Matrix b = random_matrix(rng, 4, 2);
        const Matrix c = random_matrix(rng, 2, 5);
        EXPECT_EQ((a * b) * c, a * (b * c));
    }
}

TEST(Kron, IndexConvention) {
    const Matrix m{{1, 2}, {3, I}};
    EXPECT_EQ(kron(Matrix::identity(2), m), direct_sum(m, m));

    // Entry enumeration: rows (0,1,2,3) map to columns (2,3,0,1).
    const Matrix swap_halves{{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}};
    EXPECT_EQ(kron(sigma(1), Matrix::identity(2)), swap_halves);

    const Matrix a{{1, 2}};
    const Matrix b{{5}, {7}};
    const Matrix k = kron(a, b);
    ASSERT_EQ(k.rows(), 2u);
    ASSERT_EQ(k.cols(), 2u);
    EXPECT_EQ(k(1, 1), GaussianRational(14));
}

TEST(Kron, MixedProductOnRandomQuadruples) {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const Matrix a = random_matrix(rng, 2, 3);
        const Matrix c = random_matrix(rng, 3, 2);
        const Matrix b = random_matrix(rng, 2, 2);
        const Matrix d = random_matrix(rng, 2, 3);
        EXPECT_EQ(kron(a, b) * kron(c, d), kron(a * c, b * d));
    }
}

TEST(Rank, Examples) {
    EXPECT_EQ(exact_rank(Matrix(3, 4)), 0u);
    EXPECT_EQ(exact_rank(Matrix::identity(5)), 5u);
    EXPECT_EQ(exact_rank(Matrix{{1, 2}, {2, 4}}), 1u);
    // Rows proportional over Q(i) but not over Q.
    EXPECT_EQ(exact_rank(Matrix{{1, I}, {I, -1}}), 1u);
}

TEST(Rank, TransposeInvariantOnRandomMatrices) {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        Matrix m = random_matrix(rng, 4, 6);
        // Force deficiency sometimes.
        if (trial % 3 == 0) {
            for (std::size_t c = 0; c < m.cols(); ++c) m(3, c) = m(0, c) * GaussianRational(2) - m(1, c) * I;
        }
        EXPECT_EQ(exact_rank(m), exact_rank(m.transpose()));
    }
}

TEST(Inverse, RoundTripAndSingular) {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 10; ++trial) {
        const Matrix m = random_matrix(rng, 4, 4, false);
        if (exact_rank(m) != 4) continue;
        EXPECT_TRUE((inverse(m) * m).is_identity());
    }
    EXPECT_THROW(inverse(Matrix{{1, 2}, {2, 4}}), std::domain_error);
}

TEST(Commutant, EmptyGeneratorSetGivesAllMatrixUnits) {
    const auto basis = commutant_basis({}, 3);
    EXPECT_EQ(basis.size(), 9u);
}

TEST(Commutant, PauliPairIsIrreducible) {
    // By hand: M commuting with s1 and s2 must be a multiple of I.
    const std::vector<Matrix> gens{I * sigma(1), I * sigma(2)};
    const auto basis = commutant_basis(gens, 2);
    ASSERT_EQ(basis.size(), 1u);
    EXPECT_TRUE(basis[0].is_scalar(basis[0](0, 0)));
    EXPECT_FALSE(basis[0].is_zero());
}

TEST(Commutant, DistinctDiagonalGivesDiagonalMatrices) {
    const std::vector<Matrix> gens{Matrix{{1, 0}, {0, 2}}};
    const auto basis = commutant_basis(gens, 2);
    ASSERT_EQ(basis.size(), 2u);
    for (const auto& m : basis) {
        EXPECT_TRUE(m(0, 1).is_zero());
        EXPECT_TRUE(m(1, 0).is_zero());
    }
}

TEST(Commutant, EveryBasisElementCommutes) {
    std::mt19937 rng(21);
    for (int trial = 0; trial < 5; ++trial) {
        // A block-structured generator has a nontrivial commutant.
        const Matrix block = random_matrix(rng, 2, 2);
        const std::vector<Matrix> gens{kron(Matrix::identity(2), block), kron(Matrix::identity(2), sigma(3))};
        const auto basis = commutant_basis(gens, 4);
        EXPECT_GE(basis.size(), 2u);
        for (const auto& m : basis)
            for (const auto& g : gens) EXPECT_EQ(m * g, g * m);
    }
}

TEST(Intertwiner, IdenticalListsGiveIdentity) {
    const std::vector<Matrix> gens{I * sigma(1), I * sigma(2)};
    const auto t = solve_intertwiner(gens, gens, 2);
    ASSERT_TRUE(t.has_value());
    EXPECT_TRUE(t->is_identity());
}

TEST(Intertwiner, PermutationConjugate) {
    const Matrix p{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}};
    const Matrix p_inv = p.transpose();
    const std::vector<Matrix> a{Matrix{{1, 0, 0}, {0, 2, 0}, {0, 0, 3}}, Matrix{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}};
    std::vector<Matrix> b;
    for (const auto& g : a) b.push_back(p * g * p_inv);
    const auto t = solve_intertwiner(a, b, 3);
    ASSERT_TRUE(t.has_value());
    EXPECT_EQ(exact_rank(*t), 3u);
    for (std::size_t k = 0; k < a.size(); ++k) EXPECT_EQ(*t * a[k], b[k] * *t);
}

TEST(Intertwiner, OppositeSignIsAntidiagonal) {
    // T(i s3) = (-i s3)T forces T diagonal entries to vanish.
    const std::vector<Matrix> a{I * sigma(3)};
    const std::vector<Matrix> b{-(I * sigma(3))};
    const auto t = solve_intertwiner(a, b, 2);
    ASSERT_TRUE(t.has_value());
    EXPECT_TRUE((*t)(0, 0).is_zero());
    EXPECT_TRUE((*t)(1, 1).is_zero());
    EXPECT_EQ(exact_rank(*t), 2u);
}

TEST(Intertwiner, InequivalentRepsGiveNone) {
    const std::vector<Matrix> a{Matrix{{1}}};
    const std::vector<Matrix> b{Matrix{{2}}};
    EXPECT_FALSE(solve_intertwiner(a, b, 1).has_value());
}

TEST(Intertwiner, NeedsACombinationWhenNoBasisElementIsInvertible) {
    // Commutant of the zero generator on C^2 is everything; the nullspace basis is the matrix units, none invertible.
    const std::vector<Matrix> a{Matrix(2, 2)};
    const std::vector<Matrix> b{Matrix(2, 2) * GaussianRational(1)};
    const auto space = hom_space(a, b);
    ASSERT_EQ(space.size(), 4u);
    const auto t = full_rank_combination(space);
    ASSERT_TRUE(t.has_value());
    EXPECT_EQ(exact_rank(*t), 2u);
}

TEST(Determinism, RepeatedCallsAreBitIdentical) {
    const std::vector<Matrix> gens{kron(sigma(1), sigma(3)), kron(Matrix::identity(2), sigma(1))};
    EXPECT_EQ(commutant_basis(gens, 4), commutant_basis(gens, 4));
}
