#include "involute/spectral.hpp"

#include "involute/errors.hpp"

#include <cmath>

namespace involute {

LambdaSeq family_lambda(const WeightSpec& spec, std::size_t n) {
    require_domain(spec, n);
    LambdaSeq l(n);
    for (std::size_t i = 0; i < n; ++i) {
        const long d = static_cast<long>(i);
        if (const auto* g = std::get_if<GammaAB>(&spec))
            l[i] = binom(g->a + Rational(d), d) / binom(g->a + g->b + Rational(d + 1), d);
        else if (const auto* g = std::get_if<GammaC>(&spec))
            l[i] = (g->c + Rational(1)).pow(-d);
        else if (const auto* dl = std::get_if<DeltaAB>(&spec))
            l[i] = binom(dl->a_prime - Rational(1), d) / binom(dl->a_prime + dl->b_prime - Rational(2), d);
        else
            throw UnsupportedFamily("no closed-form spectrum for " + describe(spec));
    }
    return l;
}

Vec eigenvalues_closed_form(const WeightSpec& spec, std::size_t n) {
    Vec e = family_lambda(spec, n);
    for (std::size_t d = 1; d < n; d += 2) e[d] = -e[d];
    return e;
}

Vec integer_cleared(Vec v) {
    mpz_class l = 1, g = 0;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
    for (auto& x : v) {
        x *= Rational(l);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.num().get_mpz_t());
    }
    if (g == 0) return v;
    int sign = 1;
    for (const auto& x : v)
        if (!x.is_zero()) {
            sign = x.sign();
            break;
        }
    Rational scale = Rational(mpz_class(g * sign)).inverse();
    for (auto& x : v) x *= scale;
    return v;
}

Rational pi_inner(const Distribution& pi, const Vec& u, const Vec& v) {
    Rational s;
    for (std::size_t x = 0; x < pi.size(); ++x) s += pi[x] * u[x] * v[x];
    return s;
}

long pascal_degree(const Vec& v) {
    const std::size_t n = v.size();
    Vec c = pascal(n).inverse * v;
    for (std::size_t d = n; d-- > 0;)
        if (!c[d].is_zero()) return static_cast<long>(d);
    return -1;
}

Vec left_from_right(const Distribution& pi, const Vec& v) {
    Vec u(v.size());
    for (std::size_t x = 0; x < v.size(); ++x) u[x] = pi[x] * v[x];
    return u;
}

EigenSystem right_eigenvectors(const WeightSpec& spec, std::size_t n, std::optional<std::size_t> max_degree) {
    if (!std::holds_alternative<GammaAB>(spec))
        throw UnsupportedFamily("eigenvectors are provided for gamma(a,b) only");
    if (n == 0) throw ValidationError("n must be positive");
    const std::size_t top = std::min(n - 1, max_degree.value_or(n - 1));
    EigenSystem es;
    es.n = n;
    es.pi = invariant_closed_form(spec, n);
    Vec all = eigenvalues_closed_form(spec, n);
    es.eigenvalues.assign(all.begin(), all.begin() + static_cast<long>(top + 1));
    const RatMatrix P = transition_matrix(spec, n).P;
    std::vector<Rational> norms;
    for (std::size_t d = 0; d <= top; ++d) {
        Vec w = pascal_column(n, d);
        for (std::size_t e = 0; e < d; ++e) {
            Rational c = pi_inner(es.pi, w, es.right[e]) / norms[e];
            for (std::size_t x = 0; x < n; ++x) w[x] -= c * es.right[e][x];
        }
        w = integer_cleared(std::move(w));
        norms.push_back(pi_inner(es.pi, w, w));
        Vec pw = P * w;
        for (std::size_t x = 0; x < n; ++x)
            if (pw[x] != es.eigenvalues[d] * w[x]) throw InternalError("Gram-Schmidt vector is not an eigenvector at d=" + std::to_string(d));
        Vec u = left_from_right(es.pi, w);
        Vec up = u * P;
        for (std::size_t x = 0; x < n; ++x)
            if (up[x] != es.eigenvalues[d] * u[x]) throw InternalError("left eigenvector check failed at d=" + std::to_string(d));
        es.right.push_back(std::move(w));
        es.left.push_back(std::move(u));
    }
    return es;
}

Vec final_left_eigenvector(std::size_t n) {
    if (n == 0) throw ValidationError("n must be positive");
    Vec u(n);
    for (std::size_t x = 0; x < n; ++x) {
        Rational c = binom(Rational(static_cast<long>(n - 1)), static_cast<long>(x));
        u[x] = x % 2 ? -c : c;
    }
    return u;
}

Rational final_left_eigenvalue(const Rational& a, const Rational& b, std::size_t n) {
    const long m = static_cast<long>(n) - 1;
    // mbinom(n, c) = binom(c+n-1, n-1) for integer n >= 1
    Rational v = binom(a + Rational(m), m) / binom(a + b + Rational(m + 1), m);
    return m % 2 ? -v : v;
}

MixingReport mixing_report(const WeightSpec& spec, std::size_t n, unsigned horizon) {
    if (n < 2) throw ValidationError("mixing report needs n >= 2");
    if (horizon < 4 || horizon > 64) throw ValidationError("horizon must lie in [4, 64]");
    MixingReport r;
    Vec ev = eigenvalues_closed_form(spec, n);
    for (std::size_t d = 1; d < n; ++d)
        if (ev[d].abs() > r.second_abs_eigenvalue) r.second_abs_eigenvalue = ev[d].abs();
    WalkMatrix w = transition_matrix(spec, n);
    Distribution pi = invariant_closed_form(spec, n);
    RatMatrix pt = identity(n);
    std::vector<double> ts, logs;
    for (unsigned t = 1; t <= horizon; ++t) {
        pt = pt * w.P;
        double worst = 0;
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t z = 0; z < n; ++z) {
                double dev = ((pt(x, z) - pi[z]) / pi[z]).abs().to_double();
                worst = std::max(worst, dev);
            }
        if (2 * t >= horizon && worst > 0) {
            ts.push_back(t);
            logs.push_back(std::log(worst));
        }
    }
    if (ts.size() < 2) {
        r.empirical_rate = 0;
        return r;
    }
    double mt = 0, ml = 0;
    for (std::size_t i = 0; i < ts.size(); ++i) mt += ts[i], ml += logs[i];
    mt /= static_cast<double>(ts.size());
    ml /= static_cast<double>(ts.size());
    double num = 0, den = 0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        num += (ts[i] - mt) * (logs[i] - ml);
        den += (ts[i] - mt) * (ts[i] - mt);
    }
    r.empirical_rate = std::exp(num / den);
    return r;
}

}  // namespace involute
