#pragma once

#include "involute/matrix.hpp"
#include "involute/weights.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace involute {

// Probability vector over {0..n-1}.
using Distribution = Vec;

struct WalkMatrix {
    std::size_t n = 0;
    RatMatrix P;  // transition matrix
    RatMatrix H;  // down-step matrix, P = H J
};

WalkMatrix transition_matrix(const WeightSpec& spec, std::size_t n);
// Wraps an arbitrary square stochastic matrix; H is recovered as P J.
WalkMatrix walk_from_matrix(RatMatrix P);

// Exact solve of pi (P - I) = 0 with sum(pi) = 1. Throws NotIrreducible
// when the solution is not unique.
Distribution stationary(const WalkMatrix& w);
Distribution invariant_closed_form(const WeightSpec& spec, std::size_t n);
// Normalizing constant used by invariant_closed_form.
Rational invariant_normalizer(const WeightSpec& spec, std::size_t n);

struct ErgodicityReport {
    bool irreducible = false;
    bool aperiodic = false;
    bool ergodic = false;
    std::vector<std::vector<std::size_t>> communicating_classes;
    std::vector<std::size_t> periods;  // one per class
};
ErgodicityReport ergodicity(const RatMatrix& P);
inline ErgodicityReport ergodicity(const WalkMatrix& w) { return ergodicity(w.P); }
// Is `target` reachable from every state along positive entries?
bool reachable_from_all(const RatMatrix& P, std::size_t target);

bool detailed_balance(const RatMatrix& P, const Distribution& pi);
inline bool detailed_balance(const WalkMatrix& w, const Distribution& pi) { return detailed_balance(w.P, pi); }
// A strictly positive pi with detailed balance, if one exists. Built along
// a spanning forest of the support graph and checked on every edge.
std::optional<Distribution> positive_reversible(const RatMatrix& P);

// Cycle-product criterion over all simple cycles of length >= 3 (n <= 12).
bool kolmogorov(const WalkMatrix& w);
// Random simple cycles; returns a violating cycle if one is found.
std::optional<std::vector<std::size_t>> kolmogorov_sampled(const WalkMatrix& w, std::size_t samples, std::uint64_t seed);

struct Trajectory {
    std::vector<std::size_t> states;  // includes the start state
    std::vector<double> empirical;    // visit frequencies over `states`
};
Trajectory simulate(const WalkMatrix& w, std::size_t x0, std::size_t steps, std::uint64_t seed);
double total_variation(const std::vector<double>& p, const Distribution& q);

RatMatrix two_step(const WalkMatrix& w);

struct SubsetWalk {
    std::size_t m = 0;
    Rational p;
    WalkMatrix walk;  // 2^m states, bit i set when element i+1 is in the subset
    Distribution pi;
    std::vector<std::pair<Rational, std::size_t>> eigenvalues;  // value, multiplicity
};
SubsetWalk subset_walk(std::size_t m, const Rational& p);
// Exact certificate for the subset spectrum: 2^m explicit left
// eigenvectors, each checked, and jointly of full rank.
bool verify_subset_spectrum(const SubsetWalk& s);

}  // namespace involute
