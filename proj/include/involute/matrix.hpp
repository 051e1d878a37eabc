#pragma once

#include "involute/rational.hpp"

#include <cstddef>
#include <vector>

namespace involute {

using Vec = std::vector<Rational>;

// Dense row-major matrix.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, const T& fill)
        : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
    }
    std::vector<T> col(std::size_t j) const {
        std::vector<T> v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }
    friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> a_;
};

using RatMatrix = Matrix<Rational>;

RatMatrix identity(std::size_t n);
// J(n): the order-reversing permutation x -> n-1-x.
RatMatrix anti_identity(std::size_t n);
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
Vec operator*(const RatMatrix& a, const Vec& v);     // column vector
Vec operator*(const Vec& u, const RatMatrix& a);     // row vector
RatMatrix transpose(const RatMatrix& a);
RatMatrix submatrix(const RatMatrix& a, std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols);
RatMatrix power(const RatMatrix& a, unsigned e);
RatMatrix kron(const RatMatrix& a, const RatMatrix& b);

bool is_lower_triangular(const RatMatrix& a);
bool is_upper_triangular(const RatMatrix& a);

// Exact Gauss-Jordan inverse; throws Singular.
RatMatrix inverse(const RatMatrix& a);
std::size_t rank(RatMatrix a);
// Fraction-free (Bareiss) determinant.
Rational determinant(const RatMatrix& a);
// Basis of the right kernel {v : a v = 0}.
std::vector<Vec> kernel(RatMatrix a);

Rational dot(const Vec& u, const Vec& v);

}  // namespace involute
