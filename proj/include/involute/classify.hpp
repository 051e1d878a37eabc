#pragma once

#include "involute/transform.hpp"
#include "involute/weights.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace involute {

namespace cls {
struct GammaAB { Rational a, b; friend bool operator==(const GammaAB&, const GammaAB&) = default; };
struct GammaC { Rational c; friend bool operator==(const GammaC&, const GammaC&) = default; };
struct DeltaReal { Rational a_prime, b_prime; friend bool operator==(const DeltaReal&, const DeltaReal&) = default; };
struct DeltaIntegerM { Rational a_prime; long m; friend bool operator==(const DeltaIntegerM&, const DeltaIntegerM&) = default; };
struct Identity { friend bool operator==(const Identity&, const Identity&) = default; };  // P = J(n)
struct NotClassified { std::string reason; friend bool operator==(const NotClassified&, const NotClassified&) = default; };
}  // namespace cls

using Classification = std::variant<cls::GammaAB, cls::GammaC, cls::DeltaReal, cls::DeltaIntegerM, cls::Identity, cls::NotClassified>;

std::string describe(const Classification& c);
bool is_classified(const Classification& c);
// The weight family behind a classification, when there is one.
std::optional<WeightSpec> to_weight(const Classification& c);

// Parameter maps from the first two eigenvalues.
Rational a_of(const Rational& mu, const Rational& nu);
Rational b_of(const Rational& mu, const Rational& nu);
Rational nu_ladder(const Rational& mu, long m);
Rational a_prime_ladder(const Rational& mu, long m);
// Smallest admissible m on the ladder for size n.
long ladder_lower_bound(const Rational& mu, std::size_t n);

Classification params_from_mu_nu(const Rational& mu, const Rational& nu, std::size_t n);

struct LadderRung {
    long m;
    Rational nu;
    Rational a_prime;
};
// Admissible rungs, largest m first.
std::vector<LadderRung> exceptional_ladder(const Rational& mu, std::size_t n);

bool is_globally_reversible(const LambdaSeq& lambda);
Classification classify_walk(const LambdaSeq& lambda);

struct SearchConfig {
    long max_denominator = 8;        // exhaustive grid, n <= 5
    std::size_t samples = 1000;      // random draws, n >= 6
    std::uint64_t seed = 20240601;
    double family_fraction = 0.25;   // share of random draws taken from family points
    std::size_t threads = 0;         // 0: INVOLUTE_THREADS or hardware
    bool keep_all_stochastic = false;
};

struct SearchRecord {
    LambdaSeq lambda;
    bool stochastic = false;
    bool reversible = false;
    Classification classification = cls::NotClassified{"not reversible"};
};

struct SearchSummary {
    std::size_t examined = 0;
    std::size_t stochastic = 0;
    std::size_t reversible = 0;
    std::size_t unclassified_reversible = 0;
    std::vector<SearchRecord> records;  // reversible (or all stochastic), canonical order
};

// Grid for n <= 5, seeded samples otherwise. Every reversible stochastic lambda should classify as a family point or J(n).
SearchSummary conjecture_search(std::size_t n, const SearchConfig& cfg);
// Evaluate one candidate; also used by the sweep.
SearchRecord evaluate_candidate(const LambdaSeq& lambda);

std::size_t configured_threads(std::size_t requested);

}  // namespace involute
