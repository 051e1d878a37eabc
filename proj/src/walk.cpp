#include "involute/walk.hpp"

#include "involute/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <random>

namespace involute {

WalkMatrix transition_matrix(const WeightSpec& spec, std::size_t n) {
    if (n == 0) throw ValidationError("n must be positive");
    require_domain(spec, n);
    WalkMatrix w{n, RatMatrix(n, n), RatMatrix(n, n)};
    for (std::size_t x = 0; x < n; ++x) {
        Rational nx = norm(spec, x);
        if (nx.is_zero()) throw ZeroNorm("N(gamma) vanishes at x=" + std::to_string(x));
        for (std::size_t y = 0; y <= x; ++y) {
            w.H(x, y) = weight_value(spec, y, x) / nx;
            w.P(x, n - 1 - y) = w.H(x, y);
        }
    }
    return w;
}

WalkMatrix walk_from_matrix(RatMatrix P) {
    const std::size_t n = P.rows();
    if (P.cols() != n) throw ValidationError("transition matrix must be square");
    RatMatrix H = P * anti_identity(n);
    return WalkMatrix{n, std::move(P), std::move(H)};
}

Distribution stationary(const WalkMatrix& w) {
    RatMatrix a = transpose(w.P);
    for (std::size_t i = 0; i < w.n; ++i) a(i, i) -= 1;
    auto ker = kernel(a);
    if (ker.size() != 1) throw NotIrreducible("stationary distribution is not unique (kernel dimension " + std::to_string(ker.size()) + ")");
    Distribution pi = ker[0];
    Rational s = std::accumulate(pi.begin(), pi.end(), Rational(0));
    for (auto& v : pi) v /= s;
    return pi;
}

Rational invariant_normalizer(const WeightSpec& spec, std::size_t n) {
    const long m = static_cast<long>(n) - 1;
    if (const auto* g = std::get_if<GammaAB>(&spec)) return binom(Rational(m + 2) + g->a * Rational(2) + g->b, m);
    if (const auto* g = std::get_if<GammaC>(&spec)) return (g->c + Rational(2)).pow(m);
    if (const auto* d = std::get_if<DeltaAB>(&spec)) return binom(d->a_prime * Rational(2) + d->b_prime - Rational(3), m);
    throw UnsupportedFamily("no closed-form invariant for " + describe(spec));
}

Distribution invariant_closed_form(const WeightSpec& spec, std::size_t n) {
    require_domain(spec, n);
    Distribution pi(n);
    const long m = static_cast<long>(n) - 1;
    for (long x = 0; x <= m; ++x) {
        Rational& v = pi[static_cast<std::size_t>(x)];
        if (const auto* g = std::get_if<GammaAB>(&spec))
            v = binom(Rational(m - x) + g->a, m - x) * binom(Rational(x + 1) + g->a + g->b, x);
        else if (const auto* g = std::get_if<GammaC>(&spec))
            v = binom(Rational(m), x) * (g->c + Rational(1)).pow(x);
        else if (const auto* d = std::get_if<DeltaAB>(&spec))
            v = binom(d->a_prime - Rational(1), m - x) * binom(d->a_prime + d->b_prime - Rational(2), x);
        else
            throw UnsupportedFamily("no closed-form invariant for " + describe(spec));
    }
    Rational z = invariant_normalizer(spec, n);
    Rational s = std::accumulate(pi.begin(), pi.end(), Rational(0));
    if (s != z) throw InternalError("closed-form normalizer mismatch for " + describe(spec));
    for (auto& v : pi) v /= z;
    return pi;
}

bool reachable_from_all(const RatMatrix& P, std::size_t target) {
    const std::size_t n = P.rows();
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{target};
    seen[target] = true;
    while (!stack.empty()) {  // reverse search from target
        std::size_t z = stack.back();
        stack.pop_back();
        for (std::size_t x = 0; x < n; ++x)
            if (!seen[x] && P(x, z).sign() > 0) {
                seen[x] = true;
                stack.push_back(x);
            }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

ErgodicityReport ergodicity(const RatMatrix& P) {
    const std::size_t n = P.rows();
    // Tarjan's strongly connected components.
    std::vector<long> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    long counter = 0;
    ErgodicityReport r;
    std::function<void(std::size_t)> visit = [&](std::size_t v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
        for (std::size_t w = 0; w < n; ++w) {
            if (P(v, w).sign() <= 0) continue;
            if (index[w] < 0) {
                visit(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            std::vector<std::size_t> cls;
            std::size_t w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                comp[w] = static_cast<long>(r.communicating_classes.size());
                cls.push_back(w);
            } while (w != v);
            std::sort(cls.begin(), cls.end());
            r.communicating_classes.push_back(std::move(cls));
        }
    };
    for (std::size_t v = 0; v < n; ++v)
        if (index[v] < 0) visit(v);
    std::sort(r.communicating_classes.begin(), r.communicating_classes.end());
    for (std::size_t c = 0; c < r.communicating_classes.size(); ++c)
        for (auto v : r.communicating_classes[c]) comp[v] = static_cast<long>(c);

    // Period of each class: gcd of level differences along internal edges.
    for (const auto& cls : r.communicating_classes) {
        const long id = comp[cls[0]];
        std::vector<long> level(n, -1);
        std::queue<std::size_t> q;
        level[cls[0]] = 0;
        q.push(cls[0]);
        long g = 0;
        while (!q.empty()) {
            std::size_t u = q.front();
            q.pop();
            for (std::size_t v = 0; v < n; ++v) {
                if (P(u, v).sign() <= 0 || comp[v] != id) continue;
                if (level[v] < 0) {
                    level[v] = level[u] + 1;
                    q.push(v);
                } else {
                    g = std::gcd(g, std::labs(level[u] + 1 - level[v]));
                }
            }
        }
        r.periods.push_back(static_cast<std::size_t>(g));
    }
    r.irreducible = r.communicating_classes.size() == 1;
    r.aperiodic = r.irreducible && r.periods[0] == 1;
    r.ergodic = r.irreducible && r.aperiodic;
    return r;
}

bool detailed_balance(const RatMatrix& P, const Distribution& pi) {
    const std::size_t n = P.rows();
    if (pi.size() != n) throw ValidationError("distribution size mismatch");
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t z = x + 1; z < n; ++z)
            if (pi[x] * P(x, z) != pi[z] * P(z, x)) return false;
    return true;
}

std::optional<Distribution> positive_reversible(const RatMatrix& P) {
    const std::size_t n = P.rows();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t z = 0; z < n; ++z)
            if ((P(x, z).sign() > 0) != (P(z, x).sign() > 0)) return std::nullopt;
    Distribution pi(n);
    std::vector<bool> seen(n, false);
    for (std::size_t root = 0; root < n; ++root) {
        if (seen[root]) continue;
        seen[root] = true;
        pi[root] = 1;
        std::vector<std::size_t> stack{root};
        while (!stack.empty()) {
            std::size_t x = stack.back();
            stack.pop_back();
            for (std::size_t z = 0; z < n; ++z) {
                if (z == x || P(x, z).sign() <= 0 || seen[z]) continue;
                seen[z] = true;
                pi[z] = pi[x] * P(x, z) / P(z, x);
                stack.push_back(z);
            }
        }
    }
    Rational s = std::accumulate(pi.begin(), pi.end(), Rational(0));
    for (auto& v : pi) v /= s;
    if (!detailed_balance(P, pi)) return std::nullopt;
    return pi;
}

namespace {

bool cycle_balanced(const RatMatrix& P, const std::vector<std::size_t>& c) {
    Rational fwd(1), bwd(1);
    for (std::size_t i = 0; i < c.size(); ++i) {
        std::size_t u = c[i], v = c[(i + 1) % c.size()];
        fwd *= P(u, v);
        bwd *= P(v, u);
    }
    return fwd == bwd;
}

void require_positive_stationary(const WalkMatrix& w) {
    if (!ergodicity(w.P).irreducible) throw NoPositiveStationary("walk is not irreducible");
}

}  // namespace

bool kolmogorov(const WalkMatrix& w) {
    require_positive_stationary(w);
    const std::size_t n = w.n;
    if (n > 12) throw ValidationError("exhaustive cycle enumeration is capped at n <= 12; use kolmogorov_sampled");
    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t z = 0; z < n; ++z)
            if (x != z && (w.P(x, z).sign() > 0 || w.P(z, x).sign() > 0)) adj[x].push_back(z);
    std::vector<std::size_t> path;
    std::vector<bool> used(n, false);
    bool ok = true;
    // Each cycle is visited once: smallest vertex first, second < last.
    std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t s, std::size_t u) {
        for (std::size_t v : adj[u]) {
            if (!ok) return;
            if (v == s && path.size() >= 3 && path[1] < path.back()) {
                if (!cycle_balanced(w.P, path)) ok = false;
            } else if (v > s && !used[v]) {
                used[v] = true;
                path.push_back(v);
                extend(s, v);
                path.pop_back();
                used[v] = false;
            }
        }
    };
    for (std::size_t s = 0; s < n && ok; ++s) {
        path = {s};
        used.assign(n, false);
        used[s] = true;
        extend(s, s);
    }
    return ok;
}

std::optional<std::vector<std::size_t>> kolmogorov_sampled(const WalkMatrix& w, std::size_t samples, std::uint64_t seed) {
    require_positive_stationary(w);
    const std::size_t n = w.n;
    std::mt19937_64 rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
        // Random walk on the undirected support until a vertex repeats.
        std::vector<std::size_t> path{std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)};
        std::vector<long> pos(n, -1);
        pos[path[0]] = 0;
        for (std::size_t step = 0; step < 4 * n; ++step) {
            std::vector<std::size_t> nb;
            std::size_t u = path.back();
            for (std::size_t z = 0; z < n; ++z)
                if (z != u && (w.P(u, z).sign() > 0 || w.P(z, u).sign() > 0)) nb.push_back(z);
            if (nb.empty()) break;
            std::size_t v = nb[std::uniform_int_distribution<std::size_t>(0, nb.size() - 1)(rng)];
            if (pos[v] >= 0) {
                std::vector<std::size_t> cyc(path.begin() + pos[v], path.end());
                if (cyc.size() >= 3 && !cycle_balanced(w.P, cyc)) return cyc;
                break;
            }
            pos[v] = static_cast<long>(path.size());
            path.push_back(v);
        }
    }
    return std::nullopt;
}

Trajectory simulate(const WalkMatrix& w, std::size_t x0, std::size_t steps, std::uint64_t seed) {
    const std::size_t n = w.n;
    if (x0 >= n) throw IndexOutOfDomain("start state out of range");
    std::vector<std::vector<double>> cdf(n, std::vector<double>(n));
    for (std::size_t x = 0; x < n; ++x) {
        double acc = 0;
        std::size_t last = 0;
        for (std::size_t z = 0; z < n; ++z) {
            acc += w.P(x, z).to_double();
            cdf[x][z] = acc;
            if (w.P(x, z).sign() > 0) last = z;
        }
        for (std::size_t z = last; z < n; ++z) cdf[x][z] = 1.0;
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    Trajectory t;
    t.states.reserve(steps + 1);
    t.states.push_back(x0);
    std::size_t x = x0;
    for (std::size_t s = 0; s < steps; ++s) {
        double u = unif(rng);
        x = static_cast<std::size_t>(std::upper_bound(cdf[x].begin(), cdf[x].end(), u) - cdf[x].begin());
        if (x >= n) x = n - 1;
        t.states.push_back(x);
    }
    t.empirical.assign(n, 0.0);
    for (auto v : t.states) t.empirical[v] += 1.0;
    for (auto& v : t.empirical) v /= static_cast<double>(t.states.size());
    return t;
}

double total_variation(const std::vector<double>& p, const Distribution& q) {
    double s = 0;
    for (std::size_t i = 0; i < p.size(); ++i) s += std::abs(p[i] - q[i].to_double());
    return s / 2;
}

RatMatrix two_step(const WalkMatrix& w) { return w.P * w.P; }

SubsetWalk subset_walk(std::size_t m, const Rational& p) {
    if (m == 0 || m > 10) throw ValidationError("subset walk needs 1 <= m <= 10");
    if (p.sign() <= 0 || p >= Rational(1)) throw ValidationError("subset walk needs 0 < p < 1");
    RatMatrix q(2, 2);
    q(0, 1) = 1;
    q(1, 0) = p;
    q(1, 1) = Rational(1) - p;
    RatMatrix k = q;
    for (std::size_t i = 1; i < m; ++i) k = kron(q, k);  // new factor is the high bit
    SubsetWalk s;
    s.m = m;
    s.p = p;
    s.walk = walk_from_matrix(std::move(k));
    const std::size_t states = std::size_t{1} << m;
    s.pi.resize(states);
    Rational denom = (Rational(1) + p).pow(static_cast<long>(m));
    for (std::size_t X = 0; X < states; ++X) {
        long size = std::popcount(X);
        s.pi[X] = p.pow(static_cast<long>(m) - size) / denom;
    }
    for (long e = 0; e <= static_cast<long>(m); ++e)
        s.eigenvalues.emplace_back((-p).pow(e), binom(Rational(static_cast<long>(m)), e).num().get_ui());
    return s;
}

bool verify_subset_spectrum(const SubsetWalk& s) {
    const std::size_t states = std::size_t{1} << s.m;
    RatMatrix basis(states, states);
    std::vector<std::size_t> count(s.m + 1, 0);
    for (std::size_t S = 0; S < states; ++S) {
        Vec u(states);
        for (std::size_t X = 0; X < states; ++X) {
            Rational v(1);
            for (std::size_t i = 0; i < s.m; ++i) {
                bool in_x = (X >> i) & 1u, in_s = (S >> i) & 1u;
                if (in_s) v *= in_x ? Rational(-1) : Rational(1);
                else v *= in_x ? Rational(1) : s.p;
            }
            u[X] = v;
        }
        Rational lambda = (-s.p).pow(std::popcount(S));
        Vec up = u * s.walk.P;
        for (std::size_t X = 0; X < states; ++X)
            if (up[X] != lambda * u[X]) return false;
        for (std::size_t X = 0; X < states; ++X) basis(S, X) = u[X];
        ++count[static_cast<std::size_t>(std::popcount(S))];
    }
    if (rank(basis) != states) return false;
    for (const auto& [value, mult] : s.eigenvalues) {
        std::size_t e = 0;
        while (e <= s.m && (-s.p).pow(static_cast<long>(e)) != value) ++e;
        if (e > s.m || count[e] != mult) return false;
    }
    return true;
}

}  // namespace involute
