#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "involute/errors.hpp"
#include "involute/transform.hpp"
#include "involute/walk.hpp"
#include "involute/weights.hpp"
#include "support.hpp"

#include <cstdio>
#include <fstream>

using namespace involute;
using testing::R;

TEST_CASE("factories validate parameters") {
    CHECK_THROWS_AS(gamma_ab(-1, 0), InvalidWeight);
    CHECK_THROWS_AS(gamma_ab(0, R("-3/2")), InvalidWeight);
    CHECK_THROWS_AS(gamma_c(0), InvalidWeight);
    CHECK_THROWS_AS(delta_ab(1, 3), InvalidWeight);
    CHECK_NOTHROW(gamma_ab(R("-1/2"), R("-1/2")));
    RatMatrix empty_col(2, 2);
    empty_col(0, 0) = 1;
    CHECK_THROWS_AS(custom_weight(2, empty_col), InvalidWeight);
}

TEST_CASE("weight values") {
    CHECK(weight_value(gamma_ab(1, 0), 0, 3) == 1);
    CHECK(weight_value(gamma_c(2), 1, 3) == 12);
    CHECK(weight_value(delta_ab(4, 2), 0, 2) == 0);
    CHECK_THROWS_AS(weight_value(delta_ab(4, 2), 0, 4), IndexOutOfDomain);
    CHECK_THROWS_AS(weight_value(gamma_ab(0, 0), 2, 1), IndexOutOfDomain);
}

TEST_CASE("closed-form norms") {
    CHECK(norm(gamma_ab(0, 0), 3) == 4);
    CHECK(norm(gamma_c(1), 3) == 8);
    CHECK(norm(delta_ab(4, 2), 2) == 6);
    CHECK(norm_direct(delta_ab(4, 2), 2) == 6);
}

TEST_CASE("closed-form norms equal direct sums on the grid") {
    std::vector<WeightSpec> specs;
    for (const auto& a : testing::ab_grid())
        for (const auto& b : testing::ab_grid()) specs.push_back(gamma_ab(a, b));
    for (const auto& c : testing::c_grid()) specs.push_back(gamma_c(c));
    for (const auto& [a, b] : testing::delta_grid()) specs.push_back(delta_ab(a, b));
    for (const auto& s : specs) {
        std::size_t lim = domain_limit(s).value_or(12);
        for (std::size_t x = 0; x < lim; ++x) {
            mpq_class direct = 0;
            for (long y = 0; y <= long(x); ++y) direct += testing::oracle_weight(s, y, long(x));
            CHECK_MESSAGE(norm(s, x) == testing::r(direct), describe(s) << " x=" << x);
        }
    }
}

TEST_CASE("domain limits") {
    CHECK(domain_limit(delta_ab(4, 2)) == std::optional<std::size_t>(4));
    CHECK(domain_limit(delta_ab(R("7/2"), R("5/2"))) == std::optional<std::size_t>(3));
    CHECK_FALSE(domain_limit(gamma_ab(R("1/2"), R("1/2"))).has_value());
    CHECK_FALSE(domain_limit(gamma_c(3)).has_value());
}

TEST_CASE("delta domain matches an independent sign scan") {
    for (long an = 5; an <= 24; ++an)
        for (long bn = 5; bn <= 16; ++bn) {
            auto spec = delta_ab(Rational(an, 2), Rational(bn, 2));
            std::size_t n = 0;
            // grow while every weight in the new row is non-negative and the diagonal is positive
            while (n < 40) {
                bool ok = testing::oracle_weight(spec, long(n), long(n)) > 0;
                for (long y = 0; y < long(n) && ok; ++y) ok = testing::oracle_weight(spec, y, long(n)) >= 0;
                if (!ok) break;
                ++n;
            }
            CHECK_MESSAGE(domain_limit(spec) == std::optional<std::size_t>(n), describe(spec));
        }
}

TEST_CASE("weight flags") {
    RatMatrix ones(5, 5, Rational(1));
    auto f = classify_weight(custom_weight(5, ones), 5);
    CHECK(f.atomic);
    CHECK(f.star_symmetric);
    CHECK(f.strictly_positive);
    auto g = classify_weight(gamma_ab(1, 0), 4);
    CHECK(g.atomic);
    CHECK_FALSE(g.star_symmetric);
    CHECK(g.strictly_positive);
    auto h = classify_weight(gamma_ab(0, 1), 4);
    CHECK_FALSE(h.atomic);
    CHECK(h.star_symmetric);
    CHECK_FALSE(classify_weight(delta_ab(4, 2), 4).strictly_positive);
}

TEST_CASE("factorization of family weights") {
    auto spec = gamma_ab(0, 0);
    auto f = factorize(spec, 4, testing::vec("1/10,1/5,3/10,2/5"));
    CHECK(f.valid);
    for (std::size_t x = 0; x < 4; ++x)
        for (std::size_t y = 0; y <= x; ++y) {
            CHECK(f.alpha[y] * f.beta(y, x) == weight_value(spec, y, x));
            CHECK(f.beta(y, x) == f.beta(3 - x, 3 - y));
        }

    auto c1 = gamma_c(1);
    auto fc = factorize(c1, 3, testing::vec("1/9,4/9,4/9"));
    CHECK(fc.valid);
    // beta[y,x] proportional to x! (2-y)! / (x-y)!
    auto expect = [](long y, long x) {
        auto fact = [](long k) { long p = 1; for (long i = 2; i <= k; ++i) p *= i; return p; };
        return Rational(fact(x) * fact(2 - y), fact(x - y));
    };
    Rational scale = fc.beta(0, 0) / expect(0, 0);
    for (long x = 0; x < 3; ++x)
        for (long y = 0; y <= x; ++y) CHECK(fc.beta(y, x) == scale * expect(y, x));
}

TEST_CASE("factorization fails for a non-reversible custom weight") {
    Vec lambda = testing::vec("1,3/5,3/10,1/20");
    RatMatrix H = binomial_transform(lambda);
    RatMatrix table(4, 4);
    for (std::size_t x = 0; x < 4; ++x)
        for (std::size_t y = 0; y <= x; ++y) table(y, x) = H(x, y);
    auto spec = custom_weight(4, table);
    auto pi = stationary(transition_matrix(spec, 4));
    CHECK_FALSE(factorize(spec, 4, pi).valid);
}

TEST_CASE("custom csv loader") {
    const char* path = "weights_test_table.csv";
    {
        std::ofstream os(path);
        os << "y,x,weight\n0,0,1\n0,1,1/2\n1,1,1/2\n0,2,1\n1,2,0\n2,2,3\n";
    }
    auto spec = load_custom_csv(path);
    std::remove(path);
    CHECK(domain_limit(spec) == std::optional<std::size_t>(3));
    CHECK(weight_value(spec, 0, 2) == 1);
    CHECK(norm(spec, 2) == 4);
    CHECK_THROWS_AS(load_custom_csv("does-not-exist.csv"), ValidationError);
}
