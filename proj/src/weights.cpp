#include "involute/weights.hpp"

#include "involute/errors.hpp"

#include <fstream>
#include <sstream>

namespace involute {

namespace {

template <class... F>
struct overloaded : F... {
    using F::operator()...;
};
template <class... F>
overloaded(F...) -> overloaded<F...>;

const Rational kMinusOne(-1);

}  // namespace

WeightSpec gamma_ab(const Rational& a, const Rational& b) {
    if (a <= kMinusOne || b <= kMinusOne) throw InvalidWeight("gamma(a,b) needs a > -1 and b > -1");
    return GammaAB{a, b};
}

WeightSpec gamma_c(const Rational& c) {
    if (c.sign() <= 0) throw InvalidWeight("gamma(c) needs c > 0");
    return GammaC{c};
}

WeightSpec delta_ab(const Rational& a_prime, const Rational& b_prime) {
    if (a_prime <= Rational(1) || b_prime <= Rational(1))
        throw InvalidWeight("delta(a',b') needs a' > 1 and b' > 1");
    return DeltaAB{a_prime, b_prime};
}

WeightSpec custom_weight(std::size_t n, RatMatrix table) {
    if (n == 0 || table.rows() != n || table.cols() != n) throw InvalidWeight("custom table must be n x n with n >= 1");
    for (std::size_t x = 0; x < n; ++x) {
        Rational col;
        for (std::size_t y = 0; y <= x; ++y) {
            if (table(y, x).sign() < 0) throw InvalidWeight("negative weight at (" + std::to_string(y) + "," + std::to_string(x) + ")");
            col += table(y, x);
        }
        for (std::size_t y = x + 1; y < n; ++y) table(y, x) = 0;
        if (col.is_zero()) throw InvalidWeight("zero column sum at x=" + std::to_string(x));
    }
    return Custom{n, std::move(table)};
}

WeightSpec load_custom_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::vector<std::tuple<std::size_t, std::size_t, Rational>> rows;
    std::string line;
    std::size_t n = 0, lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::stringstream ss(line);
        std::string ys, xs, vs;
        if (!std::getline(ss, ys, ',') || !std::getline(ss, xs, ',') || !std::getline(ss, vs))
            throw ParseError(path + ":" + std::to_string(lineno) + ": expected y,x,value");
        if (lineno == 1 && ys.find_first_not_of(" 0123456789") != std::string::npos) continue;  // header
        std::size_t y = std::stoul(ys), x = std::stoul(xs);
        if (y > x) throw ParseError(path + ":" + std::to_string(lineno) + ": need y <= x");
        rows.emplace_back(y, x, Rational::parse(vs));
        n = std::max(n, x + 1);
    }
    RatMatrix t(n, n);
    for (auto& [y, x, v] : rows) t(y, x) = v;
    return custom_weight(n, std::move(t));
}

std::string describe(const WeightSpec& spec) {
    return std::visit(overloaded{
        [](const GammaAB& g) { return "gamma(" + g.a.str() + "," + g.b.str() + ")"; },
        [](const GammaC& g) { return "gamma_c(" + g.c.str() + ")"; },
        [](const DeltaAB& d) { return "delta(" + d.a_prime.str() + "," + d.b_prime.str() + ")"; },
        [](const Custom& c) { return "custom(n=" + std::to_string(c.n) + ")"; },
    }, spec);
}

bool is_named(const WeightSpec& spec) { return !std::holds_alternative<Custom>(spec); }

std::size_t delta_domain_formula(const DeltaAB& d) {
    mpz_class ca = d.a_prime.ceil();
    if (d.b_prime.is_integer()) return ca.get_ui();
    mpz_class cb = d.b_prime.ceil();
    return (ca < cb ? ca : cb).get_ui();
}

namespace {

Rational raw_weight(const WeightSpec& spec, std::size_t y, std::size_t x) {
    const long ly = static_cast<long>(y), lx = static_cast<long>(x);
    return std::visit(overloaded{
        [&](const GammaAB& g) { return binom(Rational(ly) + g.a, ly) * binom(g.b + Rational(lx - ly), lx - ly); },
        [&](const GammaC& g) { return binom(Rational(lx), ly) * g.c.pow(lx - ly); },
        [&](const DeltaAB& d) {
            return binom(d.a_prime - Rational(1), ly) * binom(d.b_prime - Rational(1), lx - ly);
        },
        [&](const Custom& c) { return c.table(y, x); },
    }, spec);
}

std::size_t delta_sign_scan(const DeltaAB& d) {
    const WeightSpec spec = d;
    std::size_t n = 0;
    for (;; ++n) {
        // Can row x = n be added?
        const std::size_t x = n;
        if (raw_weight(spec, x, x).sign() <= 0) return n;
        for (std::size_t y = 0; y < x; ++y)
            if (raw_weight(spec, y, x).sign() < 0) return n;
        if (n > 100000) throw InternalError("delta sign scan did not terminate");
    }
}

}  // namespace

std::optional<std::size_t> domain_limit(const WeightSpec& spec) {
    if (const auto* d = std::get_if<DeltaAB>(&spec)) return delta_sign_scan(*d);
    if (const auto* c = std::get_if<Custom>(&spec)) return c->n;
    return std::nullopt;
}

void require_domain(const WeightSpec& spec, std::size_t n) {
    auto lim = domain_limit(spec);
    if (lim && n > *lim)
        throw IndexOutOfDomain(describe(spec) + " is only defined for n <= " + std::to_string(*lim));
}

Rational weight_value(const WeightSpec& spec, std::size_t y, std::size_t x) {
    if (y > x) throw IndexOutOfDomain("weight needs y <= x");
    require_domain(spec, x + 1);
    return raw_weight(spec, y, x);
}

Rational norm_direct(const WeightSpec& spec, std::size_t x) {
    require_domain(spec, x + 1);
    Rational s;
    for (std::size_t y = 0; y <= x; ++y) s += raw_weight(spec, y, x);
    return s;
}

Rational norm(const WeightSpec& spec, std::size_t x) {
    require_domain(spec, x + 1);
    const long lx = static_cast<long>(x);
    return std::visit(overloaded{
        [&](const GammaAB& g) { return binom(Rational(lx + 1) + g.a + g.b, lx); },
        [&](const GammaC& g) { return (g.c + Rational(1)).pow(lx); },
        [&](const DeltaAB& d) { return binom(d.a_prime + d.b_prime - Rational(2), lx); },
        [&](const Custom&) { return norm_direct(spec, x); },
    }, spec);
}

WeightFlags classify_weight(const WeightSpec& spec, std::size_t n) {
    require_domain(spec, n);
    WeightFlags f{true, true, true};
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y <= x; ++y) {
            Rational w = raw_weight(spec, y, x);
            if (w != raw_weight(spec, y, y)) f.atomic = false;
            if (w != raw_weight(spec, n - 1 - x, n - 1 - y)) f.star_symmetric = false;
            if (w.sign() <= 0) f.strictly_positive = false;
        }
    return f;
}

FactorizationResult factorize(const WeightSpec& spec, std::size_t n, const Vec& pi) {
    require_domain(spec, n);
    if (pi.size() != n) throw InternalError("distribution size mismatch");
    FactorizationResult r;
    r.alpha.resize(n);
    for (std::size_t y = 0; y < n; ++y) {
        Rational nn = norm(spec, n - 1 - y);
        if (nn.is_zero()) throw DivisionByZero("N(gamma) vanishes at x=" + std::to_string(n - 1 - y));
        if (pi[n - 1 - y].sign() <= 0) throw ValidationError("factorize needs a strictly positive distribution");
        r.alpha[y] = pi[n - 1 - y] / nn;
    }
    Rational g00 = raw_weight(spec, 0, 0);
    if (!g00.is_zero()) {
        Rational s = g00 / r.alpha[0];
        for (auto& a : r.alpha) a *= s;
    }
    r.beta = RatMatrix(n, n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y <= x; ++y) r.beta(y, x) = raw_weight(spec, y, x) / r.alpha[y];
    r.valid = true;
    for (std::size_t x = 0; x < n && r.valid; ++x)
        for (std::size_t y = 0; y <= x; ++y)
            if (r.beta(y, x) != r.beta(n - 1 - x, n - 1 - y)) {
                r.valid = false;
                break;
            }
    return r;
}

}  // namespace involute
