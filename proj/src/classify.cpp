#include "involute/classify.hpp"

#include "involute/errors.hpp"
#include "involute/spectral.hpp"
#include "involute/walk.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <thread>

namespace involute {

namespace {

template <class... F>
struct overloaded : F... {
    using F::operator()...;
};
template <class... F>
overloaded(F...) -> overloaded<F...>;

const Rational kOne(1);

}  // namespace

std::string describe(const Classification& c) {
    return std::visit(overloaded{
        [](const cls::GammaAB& g) { return "gamma(" + g.a.str() + "," + g.b.str() + ")"; },
        [](const cls::GammaC& g) { return "gamma_c(" + g.c.str() + ")"; },
        [](const cls::DeltaReal& d) { return "delta(" + d.a_prime.str() + "," + d.b_prime.str() + ")"; },
        [](const cls::DeltaIntegerM& d) { return "delta(" + d.a_prime.str() + "," + std::to_string(d.m) + ") [ladder]"; },
        [](const cls::Identity&) { return std::string("J(n)"); },
        [](const cls::NotClassified& n) { return "unclassified: " + n.reason; },
    }, c);
}

bool is_classified(const Classification& c) { return !std::holds_alternative<cls::NotClassified>(c); }

std::optional<WeightSpec> to_weight(const Classification& c) {
    if (const auto* g = std::get_if<cls::GammaAB>(&c)) return GammaAB{g->a, g->b};
    if (const auto* g = std::get_if<cls::GammaC>(&c)) return GammaC{g->c};
    if (const auto* d = std::get_if<cls::DeltaReal>(&c)) return DeltaAB{d->a_prime, d->b_prime};
    if (const auto* d = std::get_if<cls::DeltaIntegerM>(&c)) return DeltaAB{d->a_prime, Rational(d->m)};
    return std::nullopt;
}

Rational a_of(const Rational& mu, const Rational& nu) { return mu * (mu - nu) / (nu - mu * mu) - kOne; }
Rational b_of(const Rational& mu, const Rational& nu) { return (kOne - mu) * (mu - nu) / (nu - mu * mu) - kOne; }

Rational nu_ladder(const Rational& mu, long m) { return mu * (Rational(m) * mu - kOne) / (Rational(m - 2) + mu); }
Rational a_prime_ladder(const Rational& mu, long m) { return (Rational(m - 2) * mu + kOne) / (kOne - mu); }

long ladder_lower_bound(const Rational& mu, std::size_t n) {
    Rational t = (kOne - mu) / mu * Rational(static_cast<long>(n) - 2);
    return t.floor().get_si() + 2;
}

namespace {

bool fits_domain(const DeltaAB& d, std::size_t n) {
    auto lim = domain_limit(WeightSpec{d});
    return !lim || n <= *lim;
}

}  // namespace

Classification params_from_mu_nu(const Rational& mu, const Rational& nu, std::size_t n) {
    if (!(mu < kOne && nu < mu && nu.sign() >= 0))
        throw OutOfRange("need 1 > mu > nu >= 0, got mu=" + mu.str() + ", nu=" + nu.str());
    if (n < 3) throw OutOfRange("classification needs n >= 3");
    const Rational mu2 = mu * mu;
    if (nu > mu2) return cls::GammaAB{a_of(mu, nu), b_of(mu, nu)};
    if (nu == mu2) return cls::GammaC{(kOne - mu) / mu};
    const long top = static_cast<long>(n) - 1;
    if (nu > nu_ladder(mu, top)) {
        DeltaAB d{-a_of(mu, nu), -b_of(mu, nu)};
        if (!fits_domain(d, n))
            return cls::NotClassified{"delta(" + d.a_prime.str() + "," + d.b_prime.str() + ") is not defined at n=" + std::to_string(n)};
        return cls::DeltaReal{d.a_prime, d.b_prime};
    }
    for (long m = std::max(2L, ladder_lower_bound(mu, n)); m <= top; ++m) {
        if (nu != nu_ladder(mu, m)) continue;
        Rational ap = a_prime_ladder(mu, m);
        if (Rational(static_cast<long>(n)) > Rational(ap.ceil())) break;
        return cls::DeltaIntegerM{ap, m};
    }
    return cls::NotClassified{"nu=" + nu.str() + " lies below the family region for mu=" + mu.str()};
}

std::vector<LadderRung> exceptional_ladder(const Rational& mu, std::size_t n) {
    if (!(mu > Rational(1, 2) && mu < kOne)) throw OutOfRange("ladder needs 1/2 < mu < 1");
    if (n < 3) throw OutOfRange("ladder needs n >= 3");
    std::vector<LadderRung> out;
    const long lo = std::max(2L, ladder_lower_bound(mu, n));
    for (long m = static_cast<long>(n) - 1; m >= lo; --m) {
        Rational ap = a_prime_ladder(mu, m);
        if (Rational(static_cast<long>(n)) > Rational(ap.ceil())) continue;
        out.push_back({m, nu_ladder(mu, m), ap});
    }
    return out;
}

namespace {

void require_walk(const LambdaSeq& lambda, const RatMatrix& P) {
    auto st = is_stochastic(lambda);
    if (!st) throw NotStochastic(st.reason);
    if (!reachable_from_all(P, 0)) throw ZeroNotAccessible("state 0 is not accessible from every state");
}

}  // namespace

bool is_globally_reversible(const LambdaSeq& lambda) {
    const std::size_t n = lambda.size();
    RatMatrix P = pl_matrix(lambda);
    require_walk(lambda, P);
    for (std::size_t m = 2; m <= n; ++m) {
        RatMatrix sub = submatrix(P, 0, n - m, m, m);
        LambdaSeq head(lambda.begin(), lambda.begin() + static_cast<long>(m));
        if (sub != pl_matrix(head) || !is_stochastic(head)) throw InternalError("top-right block is not an involutive walk");
        WalkMatrix w = walk_from_matrix(sub);
        bool rev;
        if (ergodicity(sub).irreducible) rev = detailed_balance(w, stationary(w));
        else rev = positive_reversible(sub).has_value();
        if (!rev) return false;
    }
    return true;
}

Classification classify_walk(const LambdaSeq& lambda) {
    const std::size_t n = lambda.size();
    if (n < 3) throw ValidationError("classification needs n >= 3");
    RatMatrix P = pl_matrix(lambda);
    require_walk(lambda, P);
    const Rational& mu = lambda[1];
    const Rational& nu = lambda[2];
    if (!(mu > nu)) throw InternalError("accessible walk with lambda_1 <= lambda_2");
    Classification c = params_from_mu_nu(mu, nu, n);
    auto spec = to_weight(c);
    if (!spec) return c;
    LambdaSeq expect = family_lambda(*spec, n);
    for (std::size_t d = 3; d < n; ++d)
        if (expect[d] != lambda[d])
            return cls::NotClassified{"lambda_" + std::to_string(d) + " = " + lambda[d].str() + " but " + describe(c) + " has " + expect[d].str()};
    return c;
}

SearchRecord evaluate_candidate(const LambdaSeq& lambda) {
    SearchRecord r;
    r.lambda = lambda;
    r.stochastic = is_stochastic(lambda).stochastic;
    if (!r.stochastic) {
        r.classification = cls::NotClassified{"not stochastic"};
        return r;
    }
    const std::size_t n = lambda.size();
    RatMatrix P = pl_matrix(lambda);
    r.reversible = positive_reversible(P).has_value();
    if (!r.reversible) return r;
    if (P == anti_identity(n)) {
        r.classification = cls::Identity{};
    } else if (n >= 3 && reachable_from_all(P, 0)) {
        r.classification = classify_walk(lambda);
    } else {
        r.classification = cls::NotClassified{"reversible but state 0 is not accessible"};
    }
    return r;
}

std::size_t configured_threads(std::size_t requested) {
    if (requested) return requested;
    if (const char* env = std::getenv("INVOLUTE_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<std::size_t>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

// Reduced fractions in [0, 1] with denominator <= q.
std::vector<Rational> unit_grid(long q) {
    std::vector<Rational> g;
    for (long d = 1; d <= q; ++d)
        for (long p = 0; p <= d; ++p) {
            Rational r(p, d);
            if (r.den() == d || (p == 0 && d == 1)) g.push_back(r);
        }
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    return g;
}

// Inverts the bottom row of H^lambda (a probability vector) to lambda.
LambdaSeq lambda_from_bottom_row(const Vec& row) {
    const std::size_t n = row.size();
    const long top = static_cast<long>(n) - 1;
    LambdaSeq l(n);
    for (long y = top; y >= 0; --y) {
        Rational f = row[static_cast<std::size_t>(y)] / binom(Rational(top), y);
        for (long e = 1; y + e <= top; ++e) {
            Rational t = binom(Rational(top - y), e) * l[static_cast<std::size_t>(y + e)];
            if (e % 2) f += t;
            else f -= t;
        }
        l[static_cast<std::size_t>(y)] = f;
    }
    return l;
}

Rational random_rational(std::mt19937_64& rng, long lo_num, long hi_num, long max_den) {
    long q = std::uniform_int_distribution<long>(1, max_den)(rng);
    long p = std::uniform_int_distribution<long>(lo_num * q, hi_num * q)(rng);
    return Rational(p, q);
}

LambdaSeq random_family_lambda(std::mt19937_64& rng, std::size_t n) {
    for (;;) {
        int kind = std::uniform_int_distribution<int>(0, 2)(rng);
        try {
            if (kind == 0) {
                Rational a = random_rational(rng, -1, 3, 4), b = random_rational(rng, -1, 3, 4);
                if (a <= Rational(-1) || b <= Rational(-1)) continue;
                return family_lambda(gamma_ab(a, b), n);
            }
            if (kind == 1) {
                Rational c = random_rational(rng, 0, 4, 4);
                if (c.sign() <= 0) continue;
                return family_lambda(gamma_c(c), n);
            }
            Rational ap = random_rational(rng, static_cast<long>(n) - 1, static_cast<long>(n) + 4, 2);
            Rational bp = random_rational(rng, 1, static_cast<long>(n) + 4, 2);
            if (ap <= Rational(1) || bp <= Rational(1)) continue;
            WeightSpec d = delta_ab(ap, bp);
            auto lim = domain_limit(d);
            if (lim && *lim < n) continue;
            return family_lambda(d, n);
        } catch (const ValidationError&) {
            continue;
        }
    }
}

}  // namespace

SearchSummary conjecture_search(std::size_t n, const SearchConfig& cfg) {
    if (n < 3 || n > 8) throw ValidationError("conjecture search supports 3 <= n <= 8");
    std::vector<LambdaSeq> candidates;
    if (n <= 5) {
        auto grid = unit_grid(cfg.max_denominator);
        std::vector<std::size_t> idx(n - 1, 0);
        for (;;) {
            LambdaSeq l(n);
            l[0] = 1;
            for (std::size_t i = 1; i < n; ++i) l[i] = grid[idx[i - 1]];
            candidates.push_back(std::move(l));
            std::size_t k = 0;
            while (k < idx.size() && ++idx[k] == grid.size()) idx[k++] = 0;
            if (k == idx.size()) break;
        }
    } else {
        std::mt19937_64 rng(cfg.seed + n);
        std::bernoulli_distribution family(cfg.family_fraction);
        std::uniform_int_distribution<long> weight(0, 4);
        for (std::size_t s = 0; s < cfg.samples; ++s) {
            if (family(rng)) {
                candidates.push_back(random_family_lambda(rng, n));
                continue;
            }
            Vec row(n);
            long total = 0;
            while (total == 0) {
                total = 0;
                for (auto& v : row) {
                    long w = weight(rng);
                    v = w;
                    total += w;
                }
            }
            for (auto& v : row) v /= Rational(total);
            candidates.push_back(lambda_from_bottom_row(row));
        }
    }

    std::vector<SearchRecord> results(candidates.size());
    const std::size_t threads = std::min(configured_threads(cfg.threads), std::max<std::size_t>(1, candidates.size()));
    auto work = [&](std::size_t t) {
        for (std::size_t i = t; i < candidates.size(); i += threads) results[i] = evaluate_candidate(candidates[i]);
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }

    SearchSummary sum;
    sum.examined = results.size();
    for (auto& r : results) {
        if (r.stochastic) ++sum.stochastic;
        if (r.reversible) {
            ++sum.reversible;
            if (!is_classified(r.classification)) ++sum.unclassified_reversible;
        }
        if (r.reversible || (cfg.keep_all_stochastic && r.stochastic)) sum.records.push_back(std::move(r));
    }
    return sum;
}

}  // namespace involute
