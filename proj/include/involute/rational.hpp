#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>

namespace involute {

// Exact fraction, always in lowest terms with positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}                     // NOLINT(implicit)
    Rational(int v) : q_(static_cast<long>(v)) {}   // NOLINT(implicit)
    Rational(const mpz_class& v) : q_(v) {}         // NOLINT(implicit)
    Rational(const mpz_class& num, const mpz_class& den);
    Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    // Accepts "p/q", integers and terminating decimals ("0.25", "-1.5e0" is not).
    static Rational parse(const std::string& s);

    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_integer() const { return q_.get_den() == 1; }
    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }
    double to_double() const { return q_.get_d(); }
    std::string str() const;

    mpz_class floor() const;
    mpz_class ceil() const;
    Rational abs() const { return Rational(::abs(q_)); }
    Rational inverse() const;
    Rational pow(long e) const;

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { return Rational(mpq_class(-q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// r(r-1)...(r-d+1)/d!
Rational binom(const Rational& r, long d);
// binom(m+c-1, c): size-c multisets from an m-set.
Rational mbinom(const Rational& m, long c);

}  // namespace involute

template <>
struct std::hash<involute::Rational> {
    size_t operator()(const involute::Rational& r) const noexcept {
        return std::hash<std::string>{}(r.str());
    }
};
