#include "involute/transform.hpp"

#include "involute/errors.hpp"
#include "involute/polynomial.hpp"
#include "involute/walk.hpp"

namespace involute {

PascalMatrix pascal(std::size_t n) {
    PascalMatrix b{n, RatMatrix(n, n), RatMatrix(n, n)};
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y <= x; ++y) {
            Rational c = binom(Rational(static_cast<long>(x)), static_cast<long>(y));
            b.forward(x, y) = c;
            b.inverse(x, y) = (x + y) % 2 ? -c : c;
        }
    return b;
}

Vec pascal_column(std::size_t n, std::size_t d) {
    Vec v(n);
    for (std::size_t x = 0; x < n; ++x) v[x] = binom(Rational(static_cast<long>(x)), static_cast<long>(d));
    return v;
}

RatMatrix binomial_transform(const LambdaSeq& lambda) {
    const std::size_t n = lambda.size();
    RatMatrix h(n, n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y <= x; ++y) {
            Rational s;
            const long k = static_cast<long>(x - y);
            for (long e = 0; e <= k; ++e) {
                Rational t = binom(Rational(k), e) * lambda[y + static_cast<std::size_t>(e)];
                if (e % 2) s -= t;
                else s += t;
            }
            h(x, y) = binom(Rational(static_cast<long>(x)), static_cast<long>(y)) * s;
        }
#ifndef NDEBUG
    PascalMatrix b = pascal(n);
    RatMatrix d(n, n);
    for (std::size_t i = 0; i < n; ++i) d(i, i) = lambda[i];
    if (b.forward * d * b.inverse != h) throw InternalError("binomial transform disagrees with B Diag B^-1");
#endif
    return h;
}

RatMatrix pl_matrix(const LambdaSeq& lambda) { return binomial_transform(lambda) * anti_identity(lambda.size()); }

Vec stochastic_sums(const LambdaSeq& lambda) {
    const std::size_t n = lambda.size();
    Vec sums(n);
    for (std::size_t z = 0; z < n; ++z) {
        const std::size_t zs = n - 1 - z;
        for (std::size_t e = 0; e <= z; ++e) {
            Rational t = binom(Rational(static_cast<long>(z)), static_cast<long>(e)) * lambda[zs + e];
            if (e % 2) sums[z] -= t;
            else sums[z] += t;
        }
    }
    return sums;
}

StochasticVerdict is_stochastic(const LambdaSeq& lambda) {
    StochasticVerdict v;
    if (lambda.empty() || lambda[0] != Rational(1)) {
        v.reason = "lambda_0 must equal 1";
        return v;
    }
    Vec sums = stochastic_sums(lambda);
    for (std::size_t z = 0; z < sums.size(); ++z)
        if (sums[z].sign() < 0) {
            v.witness = z;
            v.reason = "bottom-row sum at z=" + std::to_string(z) + " is " + sums[z].str() + " < 0";
            return v;
        }
    v.stochastic = true;
    return v;
}

bool is_stochastic_direct(const LambdaSeq& lambda) {
    RatMatrix p = pl_matrix(lambda);
    for (std::size_t x = 0; x < p.rows(); ++x) {
        Rational s;
        for (std::size_t z = 0; z < p.cols(); ++z) {
            if (p(x, z).sign() < 0) return false;
            s += p(x, z);
        }
        if (s != Rational(1)) return false;
    }
    return true;
}

bool is_ergodic_lambda(const LambdaSeq& lambda) {
    auto st = is_stochastic(lambda);
    if (!st) throw NotStochastic(st.reason);
    const std::size_t n = lambda.size();
    RatMatrix p = pl_matrix(lambda);
    if (!reachable_from_all(p, 0)) return false;
    bool ergodic = ergodicity(p).ergodic;
    // Accessibility of 0 alone does not force irreducibility: (1, 2/3, 2/3) reaches 0 from
    // everywhere but never re-enters 1. The tail structure is asserted for ergodic walks only.
    if (n >= 3 && ergodic) {
        // Strictly decreasing, then a constant positive tail of length s <= n/2.
        std::size_t s = 1;
        while (s < n && lambda[n - 1 - s] == lambda[n - 1]) ++s;
        bool shape = 2 * s <= n && lambda[n - 1].sign() > 0;
        for (std::size_t d = 0; d + s < n; ++d)
            if (!(lambda[d] > lambda[d + 1])) shape = false;
        if (!shape) throw InternalError("ergodic walk violates the decreasing-tail structure");
    }
    return ergodic;
}

bool check_adep(const RatMatrix& L) {
    const std::size_t n = L.rows();
    std::vector<Rational> roots(n);
    for (std::size_t d = 0; d < n; ++d) roots[d] = d % 2 ? -L(d, d) : L(d, d);
    return charpoly(L * anti_identity(n)) == Polynomial::from_roots(roots);
}

std::optional<std::size_t> gadep_failure(const RatMatrix& L) {
    for (std::size_t m = 1; m <= L.rows(); ++m)
        if (!check_adep(submatrix(L, 0, 0, m, m))) return m;
    return std::nullopt;
}

bool check_gadep(const RatMatrix& L) { return !gadep_failure(L).has_value(); }

std::optional<std::size_t> binomial_transform_failure(const RatMatrix& L) {
    const std::size_t n = L.rows();
    for (std::size_t d = 0; d < n; ++d) {
        Vec v = pascal_column(n, d);
        Vec lv = L * v;
        for (std::size_t x = 0; x < n; ++x)
            if (lv[x] != L(d, d) * v[x]) return d;
    }
    return std::nullopt;
}

bool is_binomial_transform(const RatMatrix& L) { return !binomial_transform_failure(L).has_value(); }

PropertyReport property_report(const RatMatrix& L) {
    if (L.rows() != L.cols() || !is_lower_triangular(L)) throw ValidationError("expected a square lower-triangular matrix");
    PropertyReport r;
    r.adep = check_adep(L);
    auto g = gadep_failure(L);
    r.gadep = !g;
    auto b = binomial_transform_failure(L);
    r.is_binomial_transform = !b;
    r.eigenbasis_action = r.is_binomial_transform;
    if (g) r.witness = "top-left " + std::to_string(*g) + "x" + std::to_string(*g) + " block fails ADEP";
    else if (b) r.witness = "L v(" + std::to_string(*b) + ") is not a multiple of v(" + std::to_string(*b) + ")";
    return r;
}

namespace {

bool conjugator_block(const RatMatrix& Q) {
    const std::size_t n = Q.rows();
    RatMatrix c = inverse(Q) * anti_identity(n) * Q;
    if (!is_upper_triangular(c)) return false;
    for (std::size_t x = 0; x < n; ++x)
        if (c(x, x) != Rational(x % 2 ? -1 : 1)) return false;
    return true;
}

}  // namespace

bool check_conjugator(const RatMatrix& Q, bool global) {
    if (Q.rows() != Q.cols()) throw ValidationError("conjugator must be square");
    if (determinant(Q).is_zero()) throw Singular("conjugator is singular");
    if (!global) return conjugator_block(Q);
    for (std::size_t m = 1; m <= Q.rows(); ++m)
        if (!conjugator_block(submatrix(Q, 0, 0, m, m))) return false;
    return true;
}

RatMatrix gadep_counterexample(Counterexample which, const Rational& tau) {
    auto r = [](long p, long q) { return Rational(p, q); };
    if (which == Counterexample::L4) {
        RatMatrix m(4, 4);
        m(0, 0) = 1;
        m(1, 0) = r(1, 3), m(1, 1) = r(2, 3);
        m(2, 0) = r(-1, 12), m(2, 1) = r(5, 6), m(2, 2) = r(1, 4);
        m(3, 0) = r(-9, 20), m(3, 1) = r(11, 10) + r(4, 5) * tau, m(3, 2) = r(3, 20) + r(1, 5) * tau, m(3, 3) = r(1, 5);
        return m;
    }
    RatMatrix m(5, 5);
    const Rational h = r(1, 2);
    m(0, 0) = 1;
    m(1, 0) = h, m(1, 1) = h;
    m(2, 0) = h - tau, m(2, 1) = tau * Rational(2), m(2, 2) = h - tau;
    m(3, 0) = h - tau * Rational(2), m(3, 1) = tau * Rational(3), m(3, 3) = h - tau;
    m(4, 0) = h - tau * Rational(4), m(4, 1) = tau * Rational(5), m(4, 3) = tau, m(4, 4) = h - tau * Rational(2);
    return m;
}

}  // namespace involute
