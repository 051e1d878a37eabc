#include "involute/continuum.hpp"

#include "involute/errors.hpp"
#include "involute/spectral.hpp"
#include "involute/weights.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace involute::continuum {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kOrder = 16;

struct Rule {
    double node[kOrder];
    double weight[kOrder];
};

// Gauss-Legendre nodes on [-1, 1] by Newton iteration on P_n.
const Rule& gauss_legendre() {
    static const Rule rule = [] {
        Rule r{};
        for (int i = 0; i < kOrder; ++i) {
            double x = std::cos(kPi * (i + 0.75) / (kOrder + 0.5));
            double dp = 0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1, p1 = x;
                for (int k = 2; k <= kOrder; ++k) {
                    double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = kOrder * (x * p1 - p0) / (x * x - 1);
                double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-16) break;
            }
            r.node[i] = x;
            r.weight[i] = 2 / ((1 - x * x) * dp * dp);
        }
        return r;
    }();
    return rule;
}

double panel(const std::function<double(double)>& f, double lo, double hi) {
    const Rule& r = gauss_legendre();
    const double h = (hi - lo) / 2, c = (hi + lo) / 2;
    double s = 0;
    for (int i = 0; i < kOrder; ++i) s += r.weight[i] * f(c + h * r.node[i]);
    return s * h;
}

double binom_d(int n, int k) {
    double r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

double integrate(const std::function<double(double)>& f, double lo, double hi, const QuadratureConfig& cfg) {
    if (hi == lo) return 0;
    std::size_t used = kOrder;
    struct Piece {
        double lo, hi, value, tol;
    };
    std::vector<Piece> stack{{lo, hi, panel(f, lo, hi), cfg.tolerance}};
    double total = 0;
    while (!stack.empty()) {
        Piece p = stack.back();
        stack.pop_back();
        const double mid = (p.lo + p.hi) / 2;
        const double left = panel(f, p.lo, mid), right = panel(f, mid, p.hi);
        used += 2 * kOrder;
        const double refined = left + right;
        if (std::abs(refined - p.value) <= std::max(p.tol, cfg.rel_tolerance * std::abs(refined))) {
            total += refined;
            continue;
        }
        if (used > cfg.node_budget)
            throw QuadratureNonConvergence("node budget of " + std::to_string(cfg.node_budget) + " exceeded");
        stack.push_back({p.lo, mid, left, p.tol / 2});
        stack.push_back({mid, p.hi, right, p.tol / 2});
    }
    return total;
}

ContinuousWalk ContinuousWalk::kappa(int a, int b) {
    if (a < 0 || b < 0) throw ValidationError("kappa walk needs integer a, b >= 0");
    ContinuousWalk w;
    w.kind = Kind::Kappa;
    w.a = a;
    w.b = b;
    return w;
}

ContinuousWalk ContinuousWalk::trig() {
    ContinuousWalk w;
    w.kind = Kind::Trig;
    return w;
}

double PolyFunction::operator()(double x) const {
    if (basis == Basis::Monomial) {
        double v = 0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * x + *it;
        return v;
    }
    double v = 0;
    for (std::size_t k = 0; k < coeffs.size(); ++k) v += coeffs[k] * std::cos(static_cast<double>(k) * kPi * x);
    return v;
}

double kappa_norm(int a, int b, double x) {
    return std::pow(x, a + b + 1) / ((a + b + 1) * binom_d(a + b, b));
}

double walk_norm(const ContinuousWalk& w, double x) {
    if (w.kind == ContinuousWalk::Kind::Kappa) return kappa_norm(w.a, w.b, x);
    const double s = std::sin(kPi * x / 2);
    return 2 * s * s / kPi;  // (1 - cos(pi x)) / pi
}

double transition_density(const ContinuousWalk& w, double x, double z) {
    const double y = 1 - z;
    if (y > x) return 0;
    if (w.kind == ContinuousWalk::Kind::Kappa)
        return std::pow(y, w.a) * std::pow(x - y, w.b) / walk_norm(w, x);
    return std::sin(kPi * y) / walk_norm(w, x);
}

// Both operators are evaluated after substituting the integration variable
// onto [0, 1], which keeps the x^-(a+b+1) factor out of the arithmetic.
double lp_apply(const ContinuousWalk& w, const std::function<double(double)>& f, double x) {
    if (!(x > 0 && x <= 1)) throw ValidationError("L_P is evaluated on (0, 1]");
    if (w.kind == ContinuousWalk::Kind::Kappa) {
        const double c = (w.a + w.b + 1) * binom_d(w.a + w.b, w.a);
        const int a = w.a, b = w.b;
        return c * integrate([&](double t) { return std::pow(t, a) * std::pow(1 - t, b) * f(1 - x * t); }, 0, 1, w.quadrature);
    }
    const double s = std::sin(kPi * x / 2);
    const double scale = kPi * x / (2 * s * s);
    return scale * integrate([&](double t) { return std::sin(kPi * x * t) * f(1 - x * t); }, 0, 1, w.quadrature);
}

double lh_apply(const ContinuousWalk& w, const std::function<double(double)>& f, double x) {
    if (w.kind != ContinuousWalk::Kind::Kappa) throw UnsupportedFamily("L_H is provided for the kappa walk");
    if (!(x > 0 && x <= 1)) throw ValidationError("L_H is evaluated on (0, 1]");
    const double c = (w.a + w.b + 1) * binom_d(w.a + w.b, w.a);
    const int a = w.a, b = w.b;
    return c * integrate([&](double t) { return std::pow(t, a) * std::pow(1 - t, b) * f(x * t); }, 0, 1, w.quadrature);
}

Rational weight_moment(int a, int b, int k) {
    const long s = 2L * a + b + k;
    return (Rational(s + 2) * binom(Rational(s + 1), a)).inverse();
}

namespace {

// Exact Gram-Schmidt over a basis with rational Gram matrix G, then
// float normalization. Returns coefficient vectors in that basis.
std::vector<std::vector<double>> orthonormalize(const std::vector<std::vector<Rational>>& G, std::size_t dmax) {
    auto inner = [&](const Vec& p, const Vec& q) {
        Rational s;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p[i].is_zero()) continue;
            for (std::size_t j = 0; j < q.size(); ++j)
                if (!q[j].is_zero()) s += p[i] * q[j] * G[i][j];
        }
        return s;
    };
    std::vector<Vec> basis;
    std::vector<std::vector<double>> out;
    for (std::size_t d = 0; d <= dmax; ++d) {
        Vec p(dmax + 1);
        p[d] = 1;
        Vec unit = p;
        for (const auto& e : basis) {
            Rational c = inner(unit, e) / inner(e, e);
            for (std::size_t i = 0; i <= dmax; ++i) p[i] -= c * e[i];
        }
        const double scale = 1 / std::sqrt(inner(p, p).to_double());
        std::vector<double> coeffs(d + 1);
        for (std::size_t i = 0; i <= d; ++i) coeffs[i] = p[i].to_double() * scale;
        basis.push_back(std::move(p));
        out.push_back(std::move(coeffs));
    }
    return out;
}

Rational sin_cos_moment(long j) {
    // pi * integral_0^1 sin(pi x) cos(j pi x) dx
    j = std::labs(j);
    if (j == 1 || j % 2) return 0;
    return Rational(2) / Rational(1 - j * j);
}

}  // namespace

std::vector<PolyFunction> jacobi_eigenfunctions(int a, int b, std::size_t dmax) {
    if (dmax > 12) throw ValidationError("dmax is capped at 12");
    std::vector<std::vector<Rational>> G(dmax + 1, std::vector<Rational>(dmax + 1));
    for (std::size_t i = 0; i <= dmax; ++i)
        for (std::size_t j = 0; j <= dmax; ++j) G[i][j] = weight_moment(a, b, static_cast<int>(i + j));
    std::vector<PolyFunction> out;
    for (auto& c : orthonormalize(G, dmax)) out.push_back({PolyFunction::Basis::Monomial, std::move(c)});
    return out;
}

std::vector<PolyFunction> trig_eigenfunctions(std::size_t dmax) {
    if (dmax > 12) throw ValidationError("dmax is capped at 12");
    // Gram matrix of cos(k pi x) under (pi/2) sin(pi x)(1 - cos(pi x)).
    std::vector<std::vector<Rational>> G(dmax + 1, std::vector<Rational>(dmax + 1));
    const Rational half(1, 2);
    for (std::size_t k = 0; k <= dmax; ++k)
        for (std::size_t l = 0; l <= dmax; ++l) {
            Rational s;
            for (long m : {static_cast<long>(k + l), static_cast<long>(k) - static_cast<long>(l)})
                s += sin_cos_moment(m) - half * (sin_cos_moment(m + 1) + sin_cos_moment(m - 1));
            G[k][l] = s * half * half;
        }
    std::vector<PolyFunction> out;
    for (auto& c : orthonormalize(G, dmax)) out.push_back({PolyFunction::Basis::Cosine, std::move(c)});
    return out;
}

std::vector<PolyFunction> eigenfunctions(const ContinuousWalk& w, std::size_t dmax) {
    return w.kind == ContinuousWalk::Kind::Kappa ? jacobi_eigenfunctions(w.a, w.b, dmax) : trig_eigenfunctions(dmax);
}

double continuum_eigenvalue(const ContinuousWalk& w, std::size_t d) {
    const double sign = d % 2 ? -1.0 : 1.0;
    if (w.kind == ContinuousWalk::Kind::Trig) return sign / static_cast<double>(d + 1);
    const long dd = static_cast<long>(d);
    Rational l = binom(Rational(w.a + dd), dd) / binom(Rational(w.a + w.b + dd + 1), dd);
    return sign * l.to_double();
}

std::vector<double> residual_grid() {
    std::vector<double> g;
    for (int k = 1; k <= 101; ++k) g.push_back(k / 101.0);
    return g;
}

double eigen_residual(const ContinuousWalk& w, std::size_t d) {
    const PolyFunction g = eigenfunctions(w, d)[d];
    const double ev = continuum_eigenvalue(w, d);
    double worst = 0;
    for (double x : residual_grid()) worst = std::max(worst, std::abs(lp_apply(w, g, x) - ev * g(x)));
    return worst;
}

double cts_invariant(const ContinuousWalk& w, double x) {
    if (w.kind == ContinuousWalk::Kind::Trig) return kPi / 2 * std::sin(kPi * x) * (1 - std::cos(kPi * x));
    const int a = w.a, b = w.b;
    const double c = (2 * a + b + 2) * binom_d(2 * a + b + 1, a);
    return c * std::pow(1 - x, a) * std::pow(x, a + b + 1);
}

double fixed_point_residual(const ContinuousWalk& w) {
    double worst = std::abs(integrate([&](double x) { return cts_invariant(w, x); }, 0, 1, w.quadrature) - 1);
    for (double z : residual_grid()) {
        double pushed = integrate([&](double x) { return cts_invariant(w, x) * transition_density(w, x, z); }, 1 - z, 1, w.quadrature);
        worst = std::max(worst, std::abs(pushed - cts_invariant(w, z)));
    }
    return worst;
}

double invariant_inner(const ContinuousWalk& w, const std::function<double(double)>& f, const std::function<double(double)>& g) {
    return integrate([&](double x) { return cts_invariant(w, x) * f(x) * g(x); }, 0, 1, w.quadrature);
}

std::vector<double> discrete_convergence(int a, int b, std::size_t d, const std::vector<std::size_t>& n_list, GridScaling scaling) {
    if (a < 0 || b < 0) throw ValidationError("discrete convergence needs integer a, b >= 0");
    if (d > 5) throw ValidationError("discrete convergence supports d <= 5");
    const PolyFunction g = jacobi_eigenfunctions(a, b, d)[d];
    double gsup = 0;
    for (int k = 0; k <= 20000; ++k) gsup = std::max(gsup, std::abs(g(k / 20000.0)));
    const double gsign = g(0) < 0 ? -1.0 : 1.0;
    std::vector<double> out;
    for (std::size_t n : n_list) {
        if (n <= d) throw ValidationError("n must exceed d");
        EigenSystem es = right_eigenvectors(gamma_ab(Rational(a), Rational(b)), n, d);
        std::vector<double> v(n);
        double vsup = 0;
        for (std::size_t x = 0; x < n; ++x) {
            v[x] = es.right[d][x].to_double();
            vsup = std::max(vsup, std::abs(v[x]));
        }
        const double vsign = v[0] < 0 ? -1.0 : 1.0;
        const double denom = scaling == GridScaling::ByN ? static_cast<double>(n) : static_cast<double>(n - 1);
        double dist = 0;
        for (std::size_t x = 0; x < n; ++x) {
            double t = static_cast<double>(x) / denom;
            dist = std::max(dist, std::abs(vsign * v[x] / vsup - gsign * g(t) / gsup));
        }
        out.push_back(dist);
    }
    return out;
}

}  // namespace involute::continuum
