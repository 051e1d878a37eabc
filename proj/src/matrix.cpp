#include "involute/matrix.hpp"

#include "involute/errors.hpp"

#include <utility>

namespace involute {

RatMatrix identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMatrix anti_identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, n - 1 - i) = 1;
    return m;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows()) throw InternalError("matrix shape mismatch");
    RatMatrix c(a.rows(), b.cols());
    mpq_class acc, t;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            acc = 0;
            for (std::size_t k = 0; k < a.cols(); ++k) {
                if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
                mpq_mul(t.get_mpq_t(), a(i, k).raw().get_mpq_t(), b(k, j).raw().get_mpq_t());
                acc += t;
            }
            c(i, j) = Rational(acc);
        }
    return c;
}

Vec operator*(const RatMatrix& a, const Vec& v) {
    if (a.cols() != v.size()) throw InternalError("matrix-vector shape mismatch");
    Vec r(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (!a(i, k).is_zero() && !v[k].is_zero()) r[i] += a(i, k) * v[k];
    return r;
}

Vec operator*(const Vec& u, const RatMatrix& a) {
    if (a.rows() != u.size()) throw InternalError("vector-matrix shape mismatch");
    Vec r(a.cols());
    for (std::size_t k = 0; k < a.rows(); ++k) {
        if (u[k].is_zero()) continue;
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!a(k, j).is_zero()) r[j] += u[k] * a(k, j);
    }
    return r;
}

RatMatrix transpose(const RatMatrix& a) {
    RatMatrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

RatMatrix submatrix(const RatMatrix& a, std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) {
    if (r0 + rows > a.rows() || c0 + cols > a.cols()) throw InternalError("submatrix out of range");
    RatMatrix s(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) s(i, j) = a(r0 + i, c0 + j);
    return s;
}

RatMatrix power(const RatMatrix& a, unsigned e) {
    RatMatrix result = identity(a.rows()), base = a;
    while (e) {
        if (e & 1u) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

RatMatrix kron(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q)
                    k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
    return k;
}

bool is_lower_triangular(const RatMatrix& a) {
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i + 1; j < a.cols(); ++j)
            if (!a(i, j).is_zero()) return false;
    return true;
}

bool is_upper_triangular(const RatMatrix& a) {
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < i && j < a.cols(); ++j)
            if (!a(i, j).is_zero()) return false;
    return true;
}

RatMatrix inverse(const RatMatrix& a) {
    const std::size_t n = a.rows();
    if (a.cols() != n) throw InternalError("inverse of non-square matrix");
    RatMatrix m = a, inv = identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c).is_zero()) ++p;
        if (p == n) throw Singular("matrix is not invertible");
        if (p != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(p, j), m(c, j));
                std::swap(inv(p, j), inv(c, j));
            }
        Rational piv = m(c, c).inverse();
        for (std::size_t j = 0; j < n; ++j) {
            m(c, j) *= piv;
            inv(c, j) *= piv;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m(r, c).is_zero()) continue;
            Rational f = m(r, c);
            for (std::size_t j = 0; j < n; ++j) {
                if (!m(c, j).is_zero()) m(r, j) -= f * m(c, j);
                if (!inv(c, j).is_zero()) inv(r, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Rational piv = m(r, c).inverse();
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= piv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t rank(RatMatrix a) { return rref(a).size(); }

std::vector<Vec> kernel(RatMatrix a) {
    auto pivots = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec v(a.cols());
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

Rational determinant(const RatMatrix& a) {
    const std::size_t n = a.rows();
    if (a.cols() != n) throw InternalError("determinant of non-square matrix");
    if (n == 0) return 1;
    // Clear denominators row by row so Bareiss runs over the integers.
    std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n));
    Rational scale(1);
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).den().get_mpz_t());
        for (std::size_t j = 0; j < n; ++j) m[i][j] = a(i, j).num() * (l / a(i, j).den());
        scale /= Rational(l);
    }
    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[p], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m[k][k];
    }
    return Rational(mpz_class(m[n - 1][n - 1] * sign)) * scale;
}

Rational dot(const Vec& u, const Vec& v) {
    if (u.size() != v.size()) throw InternalError("dot product size mismatch");
    Rational s;
    for (std::size_t i = 0; i < u.size(); ++i)
        if (!u[i].is_zero() && !v[i].is_zero()) s += u[i] * v[i];
    return s;
}

}  // namespace involute
