#include "involute/polynomial.hpp"

#include "involute/errors.hpp"

#include <sstream>
#include <utility>

namespace involute {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::from_roots(const std::vector<Rational>& roots) {
    std::vector<Rational> c{Rational(1)};
    for (const auto& r : roots) {
        std::vector<Rational> next(c.size() + 1);
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= r * c[i];
        }
        c = std::move(next);
    }
    return Polynomial(std::move(c));
}

Rational Polynomial::eval(const Rational& x) const {
    Rational v;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
    return v;
}

std::string Polynomial::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
        const Rational& c = c_[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        Rational mag = c.abs();
        os << (c.sign() < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        if (i == 0 || mag != Rational(1)) os << mag;
        if (i > 0) os << (i == 0 || mag != Rational(1) ? "*" : "") << "X" << (i > 1 ? "^" + std::to_string(i) : "");
        first = false;
    }
    return os.str();
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.c_.empty() || b.c_.empty()) return Polynomial();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
}

Polynomial charpoly(const RatMatrix& a) {
    const std::size_t n = a.rows();
    if (a.cols() != n) throw InternalError("charpoly of non-square matrix");
    RatMatrix h = a;
    // Similarity reduction to upper Hessenberg form.
    for (std::size_t k = 0; k + 2 < n; ++k) {
        std::size_t p = k + 1;
        while (p < n && h(p, k).is_zero()) ++p;
        if (p == n) continue;
        if (p != k + 1) {
            for (std::size_t j = 0; j < n; ++j) std::swap(h(p, j), h(k + 1, j));
            for (std::size_t i = 0; i < n; ++i) std::swap(h(i, p), h(i, k + 1));
        }
        Rational piv = h(k + 1, k).inverse();
        for (std::size_t r = k + 2; r < n; ++r) {
            if (h(r, k).is_zero()) continue;
            Rational u = h(r, k) * piv;
            for (std::size_t j = 0; j < n; ++j)
                if (!h(k + 1, j).is_zero()) h(r, j) -= u * h(k + 1, j);
            for (std::size_t i = 0; i < n; ++i)
                if (!h(i, r).is_zero()) h(i, k + 1) += u * h(i, r);
        }
    }
    std::vector<Polynomial> p{Polynomial({Rational(1)})};
    for (std::size_t m = 0; m < n; ++m) {
        Polynomial next = Polynomial({-h(m, m), Rational(1)}) * p[m];
        std::vector<Rational> acc = next.coeffs();
        acc.resize(m + 2);
        Rational t(1);
        for (std::size_t i = m; i-- > 0;) {
            t *= h(i + 1, i);
            if (t.is_zero()) break;
            Rational f = h(i, m) * t;
            if (f.is_zero()) continue;
            const auto& pc = p[i].coeffs();
            for (std::size_t j = 0; j < pc.size(); ++j) acc[j] -= f * pc[j];
        }
        p.push_back(Polynomial(std::move(acc)));
    }
    return p[n];
}

Polynomial charpoly_faddeev(const RatMatrix& a) {
    const std::size_t n = a.rows();
    if (a.cols() != n) throw InternalError("charpoly of non-square matrix");
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    RatMatrix m(n, n);  // M_0 = 0
    for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
        RatMatrix am = a * m;
        Rational tr;
        for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
        c[n - k] = -tr / Rational(static_cast<long>(k));
        m = std::move(am);
    }
    return Polynomial(std::move(c));
}

}  // namespace involute
