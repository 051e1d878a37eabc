#pragma once

#include "involute/matrix.hpp"

#include <string>
#include <vector>

namespace involute {

// Univariate polynomial, coefficients from the constant term upwards.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);

    // prod_i (X - roots[i])
    static Polynomial from_roots(const std::vector<Rational>& roots);

    const std::vector<Rational>& coeffs() const { return c_; }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    Rational eval(const Rational& x) const;
    std::string str() const;

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return a.c_ != b.c_; }

private:
    void trim();
    std::vector<Rational> c_;
};

// det(X I - A) via reduction to upper Hessenberg form, O(n^3) exact.
Polynomial charpoly(const RatMatrix& a);
// det(X I - A) via Faddeev-LeVerrier, O(n^4); independent second route.
Polynomial charpoly_faddeev(const RatMatrix& a);

}  // namespace involute
