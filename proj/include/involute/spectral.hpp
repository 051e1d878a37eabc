#pragma once

#include "involute/transform.hpp"
#include "involute/walk.hpp"
#include "involute/weights.hpp"

namespace involute {

// Unsigned lambda_0..lambda_{n-1}: H(family) = binomial_transform(family_lambda).
LambdaSeq family_lambda(const WeightSpec& spec, std::size_t n);
// Signed eigenvalues (-1)^d lambda_d of P(family).
Vec eigenvalues_closed_form(const WeightSpec& spec, std::size_t n);

struct EigenSystem {
    std::size_t n = 0;
    Vec eigenvalues;            // index d
    std::vector<Vec> right;     // integer-cleared, pi-orthogonal
    std::vector<Vec> left;      // pi .* right
    Distribution pi;
};

// pi-weighted Gram-Schmidt of the Pascal columns, degrees 0..max_degree
// (default all), each verified to be an exact eigenvector.
EigenSystem right_eigenvectors(const WeightSpec& spec, std::size_t n, std::optional<std::size_t> max_degree = std::nullopt);
Vec left_from_right(const Distribution& pi, const Vec& v);
// (-1)^x binom(n-1, x)
Vec final_left_eigenvector(std::size_t n);
// Its eigenvalue for gamma(a,b): (-1)^(n-1) mbinom(n,a)/mbinom(n,a+b+1).
Rational final_left_eigenvalue(const Rational& a, const Rational& b, std::size_t n);

// Scale to integer entries with gcd 1 and a positive first non-zero entry.
Vec integer_cleared(Vec v);
Rational pi_inner(const Distribution& pi, const Vec& u, const Vec& v);
// Largest d with a non-zero coefficient in the Pascal-column expansion.
long pascal_degree(const Vec& v);

struct MixingReport {
    Rational second_abs_eigenvalue;
    double empirical_rate = 0;
};
// Decay of max |P^t(x,z)/pi_z - 1| for t <= horizon, fitted on the tail.
MixingReport mixing_report(const WeightSpec& spec, std::size_t n, unsigned horizon = 48);

}  // namespace involute
