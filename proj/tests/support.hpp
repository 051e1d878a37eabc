#pragma once

// Shared helpers and independent oracles for the test binaries.
// Oracles deliberately avoid the library's elimination, transform and
// closed-form code paths; they use naive loops over mpq_class.

#include "involute/matrix.hpp"
#include "involute/polynomial.hpp"
#include "involute/rational.hpp"
#include "involute/weights.hpp"

#include <gmpxx.h>

#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace testing {

using involute::Rational;
using involute::RatMatrix;
using involute::Vec;

inline Rational R(const std::string& s) { return Rational::parse(s); }

inline Vec vec(const std::string& csv) {
    Vec v;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(R(item));
    return v;
}

// Rows separated by ';', entries by ','.
inline RatMatrix mat(const std::string& spec) {
    std::vector<Vec> rows;
    std::stringstream ss(spec);
    std::string row;
    while (std::getline(ss, row, ';')) rows.push_back(vec(row));
    RatMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
}

inline mpq_class q(const Rational& r) { return r.raw(); }
inline Rational r(const mpq_class& x) { return Rational(x); }

// binom by the falling factorial, written against raw mpq_class.
inline mpq_class oracle_binom(const mpq_class& top, long d) {
    if (d < 0) return 0;
    mpq_class acc = 1;
    for (long i = 0; i < d; ++i) acc = acc * (top - i) / (i + 1);
    return acc;
}

// Plain Gaussian elimination over Q with row pivoting.
inline mpq_class oracle_det(std::vector<std::vector<mpq_class>> a) {
    const std::size_t n = a.size();
    mpq_class det = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k] == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            std::swap(a[p], a[k]);
            det = -det;
        }
        det *= a[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            mpq_class f = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return det;
}

// det(X I - A) sampled at X = 0..n, then Newton interpolation back to coefficients.
inline std::vector<Rational> oracle_charpoly(const RatMatrix& A) {
    const std::size_t n = A.rows();
    std::vector<mpq_class> xs(n + 1), ys(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m[i][j] = (i == j ? mpq_class(long(k)) : mpq_class(0)) - q(A(i, j));
        xs[k] = long(k);
        ys[k] = oracle_det(m);
    }
    std::vector<mpq_class> dd = ys;
    for (std::size_t lvl = 1; lvl <= n; ++lvl)
        for (std::size_t i = n; i >= lvl; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - lvl]);
    std::vector<mpq_class> coeffs(n + 1, 0);
    for (std::size_t i = n + 1; i-- > 0;) {
        std::vector<mpq_class> next(n + 1, 0);
        for (std::size_t j = 0; j < n; ++j) next[j + 1] += coeffs[j];
        for (std::size_t j = 0; j <= n; ++j) next[j] -= xs[i] * coeffs[j];
        next[0] += dd[i];
        coeffs = next;
    }
    std::vector<Rational> out;
    for (auto& c : coeffs) out.push_back(r(c));
    while (out.size() > 1 && out.back().is_zero()) out.pop_back();
    return out;
}

// Coefficients of prod (X - root).
inline std::vector<Rational> oracle_from_roots(const std::vector<Rational>& roots) {
    std::vector<mpq_class> c{1};
    for (const auto& rt : roots) {
        std::vector<mpq_class> next(c.size() + 1, 0);
        for (std::size_t j = 0; j < c.size(); ++j) {
            next[j + 1] += c[j];
            next[j] -= q(rt) * c[j];
        }
        c = next;
    }
    std::vector<Rational> out;
    for (auto& v : c) out.push_back(r(v));
    return out;
}

inline mpq_class oracle_weight(const involute::WeightSpec& spec, long y, long x) {
    if (auto g = std::get_if<involute::GammaAB>(&spec))
        return oracle_binom(q(g->a) + y, y) * oracle_binom(q(g->b) + (x - y), x - y);
    if (auto g = std::get_if<involute::GammaC>(&spec)) {
        mpq_class p = 1;
        for (long i = 0; i < x - y; ++i) p *= q(g->c);
        return oracle_binom(x, y) * p;
    }
    if (auto d = std::get_if<involute::DeltaAB>(&spec))
        return oracle_binom(q(d->a_prime) - 1, y) * oracle_binom(q(d->b_prime) - 1, x - y);
    return q(std::get<involute::Custom>(spec).table(y, x));
}

// P[x][z] = gamma[n-1-z, x] / sum_y gamma[y, x], zero when the interval is empty.
inline RatMatrix oracle_P(const involute::WeightSpec& spec, std::size_t n) {
    RatMatrix P(n, n);
    for (long x = 0; x < long(n); ++x) {
        mpq_class total = 0;
        for (long y = 0; y <= x; ++y) total += oracle_weight(spec, y, x);
        for (long z = 0; z < long(n); ++z) {
            long y = long(n) - 1 - z;
            if (y <= x) P(x, z) = r(oracle_weight(spec, y, x) / total);
        }
    }
    return P;
}

// P^lambda = B diag(lambda) B^{-1} J with B built by Pascal's rule.
inline RatMatrix oracle_PL(const Vec& lambda) {
    const std::size_t n = lambda.size();
    std::vector<std::vector<mpq_class>> B(n, std::vector<mpq_class>(n, 0)), Bi = B, H = B;
    for (std::size_t x = 0; x < n; ++x) {
        B[x][0] = 1;
        for (std::size_t y = 1; y <= x; ++y) B[x][y] = B[x - 1][y - 1] + (y < x ? B[x - 1][y] : mpq_class(0));
    }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y <= x; ++y) Bi[x][y] = ((x + y) % 2 ? -1 : 1) * B[x][y];
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t k = 0; k < n; ++k) H[x][y] += B[x][k] * q(lambda[k]) * Bi[k][y];
    RatMatrix P(n, n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t z = 0; z < n; ++z) P(x, z) = r(H[x][n - 1 - z]);
    return P;
}

inline bool oracle_stochastic(const RatMatrix& P) {
    for (std::size_t i = 0; i < P.rows(); ++i) {
        mpq_class s = 0;
        for (std::size_t j = 0; j < P.cols(); ++j) {
            if (q(P(i, j)) < 0) return false;
            s += q(P(i, j));
        }
        if (s != 1) return false;
    }
    return true;
}

inline bool oracle_fixed(const RatMatrix& P, const Vec& pi) {
    mpq_class total = 0;
    for (std::size_t z = 0; z < P.cols(); ++z) {
        mpq_class s = 0;
        for (std::size_t x = 0; x < P.rows(); ++x) s += q(pi[x]) * q(P(x, z));
        if (s != q(pi[z])) return false;
        total += q(pi[z]);
    }
    return total == 1;
}

inline bool oracle_balance(const RatMatrix& P, const Vec& pi) {
    for (std::size_t x = 0; x < P.rows(); ++x)
        for (std::size_t z = 0; z < P.cols(); ++z)
            if (q(pi[x]) * q(P(x, z)) != q(pi[z]) * q(P(z, x))) return false;
    return true;
}

inline RatMatrix oracle_mul(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            mpq_class s = 0;
            for (std::size_t k = 0; k < a.cols(); ++k) s += q(a(i, k)) * q(b(k, j));
            c(i, j) = r(s);
        }
    return c;
}

// Signed eigenvalue list straight from the family formulas.
inline std::vector<Rational> oracle_signed_eigenvalues(const involute::WeightSpec& spec, std::size_t n) {
    std::vector<Rational> out;
    for (long d = 0; d < long(n); ++d) {
        mpq_class lam;
        if (auto g = std::get_if<involute::GammaAB>(&spec))
            lam = oracle_binom(q(g->a) + d, d) / oracle_binom(q(g->a) + q(g->b) + d + 1, d);
        else if (auto g = std::get_if<involute::GammaC>(&spec)) {
            lam = 1;
            for (long i = 0; i < d; ++i) lam /= q(g->c) + 1;
        } else {
            auto& dl = std::get<involute::DeltaAB>(spec);
            lam = oracle_binom(q(dl.a_prime) - 1, d) / oracle_binom(q(dl.a_prime) + q(dl.b_prime) - 2, d);
        }
        out.push_back(r(d % 2 ? mpq_class(-lam) : lam));
    }
    return out;
}

// Parameter grid shared by several tests.
inline std::vector<Rational> ab_grid() { return {R("-1/2"), R("0"), R("1/2"), R("1"), R("2")}; }
inline std::vector<Rational> c_grid() { return {R("1/2"), R("1"), R("2")}; }
inline std::vector<std::pair<Rational, Rational>> delta_grid() {
    return {{R("4"), R("2")}, {R("5"), R("3")}, {R("7/2"), R("5/2")}};
}

inline Rational random_rational(std::mt19937_64& rng, long lo, long hi, long max_den) {
    std::uniform_int_distribution<long> den(1, max_den);
    long d = den(rng);
    std::uniform_int_distribution<long> num(lo * d, hi * d);
    return Rational(num(rng), d);
}

}  // namespace testing
