#pragma once

#include "spinprod/exact/gaussian_rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace spinprod::exact {

/// Raised when operand dimensions do not conform.
class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/**
 * Dense row-major matrix over the Gaussian rationals.
 *
 * Entry (r, c) lives at index r * cols + c. This layout is also the
 * serialization order, so it must not change.
 */
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::size_t rows, std::size_t cols, std::vector<GaussianRational> entries);
    /// Row-wise literal, e.g. Matrix{{0, 1}, {1, 0}}.
    Matrix(std::initializer_list<std::initializer_list<GaussianRational>> rows);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
    static Matrix diagonal(std::span<const GaussianRational> diag);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    std::span<const GaussianRational> entries() const noexcept { return data_; }

    const GaussianRational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    GaussianRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    bool is_zero() const;
    bool is_identity() const;
    /// True when every entry is a scalar multiple s of the identity.
    bool is_scalar(const GaussianRational& s) const;

    Matrix transpose() const;
    /// Conjugate transpose.
    Matrix adjoint() const;
    GaussianRational trace() const;
    Matrix column(std::size_t c) const;
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const GaussianRational& s);

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const GaussianRational& s) { return a *= s; }
    friend Matrix operator*(const GaussianRational& s, Matrix a) { return a *= s; }
    Matrix operator-() const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<GaussianRational> data_;
};

/// Exact product a·b. Rows are distributed over OpenMP threads for large operands.
Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);

/// kron(a, b)(i·b.rows + k, j·b.cols + l) = a(i, j)·b(k, l).
Matrix kron(const Matrix& a, const Matrix& b);
/// Left fold of kron over a non-empty list.
Matrix kron(std::span<const Matrix> factors);

/// Block-diagonal [a 0; 0 b].
Matrix direct_sum(const Matrix& a, const Matrix& b);
Matrix direct_sum(std::span<const Matrix> blocks);

/// Horizontal concatenation [a | b].
Matrix hstack(const Matrix& a, const Matrix& b);

/// a·b + b·a.
Matrix anticommutator(const Matrix& a, const Matrix& b);
/// a·b - b·a.
Matrix commutator(const Matrix& a, const Matrix& b);

/// The Pauli matrices; sigma(0) is the identity.
Matrix sigma(int k);

namespace serial {

/// Reference triple loop, no threading and no zero skipping.
Matrix mat_mul(const Matrix& a, const Matrix& b);

}  // namespace serial

}  // namespace spinprod::exact
