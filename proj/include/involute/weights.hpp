#pragma once

#include "involute/matrix.hpp"
#include "involute/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace involute {

// gamma[y,x] = binom(y+a, y) binom(b+x-y, x-y)
struct GammaAB {
    Rational a, b;
    friend bool operator==(const GammaAB&, const GammaAB&) = default;
};
// gamma[y,x] = binom(x, y) c^(x-y)
struct GammaC {
    Rational c;
    friend bool operator==(const GammaC&, const GammaC&) = default;
};
// gamma[y,x] = binom(a'-1, y) binom(b'-1, x-y); only valid on a bounded domain.
struct DeltaAB {
    Rational a_prime, b_prime;
    friend bool operator==(const DeltaAB&, const DeltaAB&) = default;
};
// Arbitrary table, entry (y, x) stored at table(y, x) for y <= x < n.
struct Custom {
    std::size_t n = 0;
    RatMatrix table;
    friend bool operator==(const Custom&, const Custom&) = default;
};

using WeightSpec = std::variant<GammaAB, GammaC, DeltaAB, Custom>;

// Validating constructors; throw InvalidWeight.
WeightSpec gamma_ab(const Rational& a, const Rational& b);
WeightSpec gamma_c(const Rational& c);
WeightSpec delta_ab(const Rational& a_prime, const Rational& b_prime);
WeightSpec custom_weight(std::size_t n, RatMatrix table);
// Rows "y,x,p/q"; n is one more than the largest index seen.
WeightSpec load_custom_csv(const std::string& path);

std::string describe(const WeightSpec& spec);
bool is_named(const WeightSpec& spec);

Rational weight_value(const WeightSpec& spec, std::size_t y, std::size_t x);
Rational norm(const WeightSpec& spec, std::size_t x);
// Sum of weight_value over y <= x, no closed form.
Rational norm_direct(const WeightSpec& spec, std::size_t x);

// nullopt means every n is allowed.
std::optional<std::size_t> domain_limit(const WeightSpec& spec);
// Formula-only variant of domain_limit for DeltaAB, used as a cross-check.
std::size_t delta_domain_formula(const DeltaAB& d);
void require_domain(const WeightSpec& spec, std::size_t n);

struct WeightFlags {
    bool atomic = false;
    bool star_symmetric = false;
    bool strictly_positive = false;
};
WeightFlags classify_weight(const WeightSpec& spec, std::size_t n);

struct FactorizationResult {
    Vec alpha;
    RatMatrix beta;  // beta(y, x) for y <= x
    bool valid = false;
};
FactorizationResult factorize(const WeightSpec& spec, std::size_t n, const Vec& pi);

}  // namespace involute
