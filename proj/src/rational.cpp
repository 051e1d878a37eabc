#include "involute/rational.hpp"

#include "involute/errors.hpp"

#include <ostream>
#include <regex>

namespace involute {

Rational::Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
    if (den == 0) throw DivisionByZero("zero denominator");
    q_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    static const std::regex frac(R"(\s*([+-]?\d+)\s*/\s*(\d+)\s*)");
    static const std::regex dec(R"(\s*([+-]?)(\d*)(?:\.(\d*))?\s*)");
    std::smatch m;
    if (std::regex_match(text, m, frac)) {
        mpz_class den(m[2].str(), 10);
        if (den == 0) throw ParseError("zero denominator in '" + text + "'");
        std::string p = m[1].str();
        if (!p.empty() && p[0] == '+') p.erase(0, 1);
        return Rational(mpz_class(p, 10), den);
    }
    if (std::regex_match(text, m, dec) && (m[2].length() + m[3].length()) > 0) {
        std::string digits = m[2].str() + m[3].str();
        mpz_class num(digits.empty() ? "0" : digits, 10);
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, m[3].length());
        if (m[1].str() == "-") num = -num;
        return Rational(num, den);
    }
    throw ParseError("not a rational: '" + text + "'");
}

std::string Rational::str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

mpz_class Rational::floor() const {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
}

mpz_class Rational::ceil() const {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    return Rational(mpq_class(1) / q_);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero("division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational binom(const Rational& r, long d) {
    if (d < 0) return Rational(0);
    Rational num(1);
    mpz_class fact(1);
    for (long i = 0; i < d; ++i) {
        num *= r - Rational(i);
        fact *= i + 1;
    }
    return num / Rational(fact);
}

Rational mbinom(const Rational& m, long c) { return binom(m + Rational(c - 1), c); }

}  // namespace involute
