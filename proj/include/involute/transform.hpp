#pragma once

#include "involute/matrix.hpp"

#include <optional>
#include <string>

namespace involute {

using LambdaSeq = Vec;

struct PascalMatrix {
    std::size_t n = 0;
    RatMatrix forward;  // binom(x, y)
    RatMatrix inverse;  // (-1)^(x+y) binom(x, y)
};
PascalMatrix pascal(std::size_t n);
// Column d of the Pascal matrix: v(d)_x = binom(x, d).
Vec pascal_column(std::size_t n, std::size_t d);

// H^lambda = B Diag(lambda) B^-1, entrywise formula (checked against the product).
RatMatrix binomial_transform(const LambdaSeq& lambda);
RatMatrix pl_matrix(const LambdaSeq& lambda);

// Bottom-row sums sum_e (-1)^e binom(z,e) lambda_{z*+e}, z = 0..n-1.
Vec stochastic_sums(const LambdaSeq& lambda);

struct StochasticVerdict {
    bool stochastic = false;
    std::optional<std::size_t> witness;  // failing z, or nullopt when lambda_0 != 1
    std::string reason;
    explicit operator bool() const { return stochastic; }
};
StochasticVerdict is_stochastic(const LambdaSeq& lambda);
// Entrywise check of P^lambda: non-negative with unit row sums.
bool is_stochastic_direct(const LambdaSeq& lambda);

// Throws NotStochastic.
bool is_ergodic_lambda(const LambdaSeq& lambda);

bool check_adep(const RatMatrix& L);
// Returns the smallest failing top-left size, or nullopt.
std::optional<std::size_t> gadep_failure(const RatMatrix& L);
bool check_gadep(const RatMatrix& L);
// Returns the first d with L v(d) != L_dd v(d).
std::optional<std::size_t> binomial_transform_failure(const RatMatrix& L);
bool is_binomial_transform(const RatMatrix& L);

struct PropertyReport {
    bool adep = false;
    bool gadep = false;
    bool eigenbasis_action = false;
    bool is_binomial_transform = false;
    std::optional<std::string> witness;
};
PropertyReport property_report(const RatMatrix& L);

// Q^-1 J Q upper triangular with diagonal (-1)^x; `global` checks every
// top-left block. Throws Singular.
bool check_conjugator(const RatMatrix& Q, bool global);

enum class Counterexample { L4, H5 };
RatMatrix gadep_counterexample(Counterexample which, const Rational& tau);

}  // namespace involute
