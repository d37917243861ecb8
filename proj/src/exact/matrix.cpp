#include "spinprod/exact/matrix.hpp"

#include <sstream>

namespace spinprod::exact {

namespace {

// Below this many output entries the OpenMP fork costs more than it saves.
constexpr std::size_t kParallelThreshold = 1024;

void require_same_shape(const Matrix& a, const Matrix& b, const char* what) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ShapeError(std::string(what) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
    }
}

void require_conformable(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) {
        throw ShapeError("mat_mul: cannot multiply " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " by " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
    }
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<GaussianRational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) {
        throw ShapeError("Matrix: expected " + std::to_string(rows_ * cols_) + " entries, got " +
                         std::to_string(data_.size()));
    }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<GaussianRational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw ShapeError("Matrix: ragged initializer");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::diagonal(std::span<const GaussianRational> diag) {
    Matrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& z : data_) {
        if (!z.is_zero()) return false;
    }
    return true;
}

bool Matrix::is_identity() const { return is_scalar(1); }

bool Matrix::is_scalar(const GaussianRational& s) const {
    if (!is_square()) return false;
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            const auto& z = (*this)(r, c);
            if (r == c ? !(z == s) : !z.is_zero()) return false;
        }
    }
    return true;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::adjoint() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c).conj();
    return t;
}

GaussianRational Matrix::trace() const {
    if (!is_square()) throw ShapeError("trace: matrix is not square");
    GaussianRational t;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

Matrix Matrix::column(std::size_t c) const { return block(0, c, rows_, 1); }

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw ShapeError("block: out of range");
    Matrix b(nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
    return b;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    require_same_shape(*this, o, "operator+");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    require_same_shape(*this, o, "operator-");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

Matrix& Matrix::operator*=(const GaussianRational& s) {
    for (auto& z : data_) {
        if (!z.is_zero()) z *= s;
    }
    return *this;
}

Matrix Matrix::operator-() const {
    Matrix m = *this;
    for (auto& z : m.data_) z = -z;
    return m;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_; ++r) {
        os << '[';
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c) os << ", ";
            os << (*this)(r, c);
        }
        os << "]\n";
    }
    return os.str();
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    require_conformable(a, b);
    const std::size_t n = a.rows();
    const std::size_t inner = a.cols();
    const std::size_t m = b.cols();
    Matrix c(n, m);
    // Gamma matrices are monomial or close to it; skipping zeros turns the
    // cubic loop into roughly n·m work.
#pragma omp parallel for schedule(static) if (n * m >= kParallelThreshold)
    for (std::ptrdiff_t ii = 0; ii < static_cast<std::ptrdiff_t>(n); ++ii) {
        const auto i = static_cast<std::size_t>(ii);
        for (std::size_t k = 0; k < inner; ++k) {
            const GaussianRational& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < m; ++j) {
                const GaussianRational& bkj = b(k, j);
                if (bkj.is_zero()) continue;
                c(i, j) += aik * bkj;
            }
        }
    }
    return c;
}

Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }

namespace serial {

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    require_conformable(a, b);
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            GaussianRational acc;
            for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
            c(i, j) = acc;
        }
    }
    return c;
}

}  // namespace serial

Matrix kron(const Matrix& a, const Matrix& b) {
    const std::size_t br = b.rows();
    const std::size_t bc = b.cols();
    Matrix k(a.rows() * br, a.cols() * bc);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const GaussianRational& aij = a(i, j);
            if (aij.is_zero()) continue;
            for (std::size_t r = 0; r < br; ++r) {
                for (std::size_t c = 0; c < bc; ++c) {
                    const GaussianRational& brc = b(r, c);
                    if (brc.is_zero()) continue;
                    k(i * br + r, j * bc + c) = aij * brc;
                }
            }
        }
    }
    return k;
}

Matrix kron(std::span<const Matrix> factors) {
    if (factors.empty()) throw ShapeError("kron: empty factor list");
    Matrix acc = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) acc = kron(acc, factors[i]);
    return acc;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
    Matrix s(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) s(r, c) = a(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) s(a.rows() + r, a.cols() + c) = b(r, c);
    return s;
}

Matrix direct_sum(std::span<const Matrix> blocks) {
    Matrix acc;
    for (const auto& b : blocks) acc = direct_sum(acc, b);
    return acc;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw ShapeError("hstack: row counts differ");
    Matrix s(a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) s(r, c) = a(r, c);
        for (std::size_t c = 0; c < b.cols(); ++c) s(r, a.cols() + c) = b(r, c);
    }
    return s;
}

Matrix anticommutator(const Matrix& a, const Matrix& b) { return a * b + b * a; }

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix sigma(int k) {
    const GaussianRational i = GaussianRational::i();
    switch (k) {
        case 0: return Matrix::identity(2);
        case 1: return Matrix{{0, 1}, {1, 0}};
        case 2: return Matrix{{0, -i}, {i, 0}};
        case 3: return Matrix{{1, 0}, {0, -1}};
        default: throw std::domain_error("sigma: index must be 0..3");
    }
}

}  // namespace spinprod::exact
