#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "involute/errors.hpp"
#include "involute/spectral.hpp"
#include "involute/transform.hpp"
#include "involute/walk.hpp"
#include "support.hpp"

using namespace involute;
using testing::R;
using testing::mat;
using testing::vec;

TEST_CASE("pascal matrices") {
    for (std::size_t n = 1; n <= 10; ++n) {
        auto p = pascal(n);
        CHECK(p.forward * p.inverse == identity(n));
        for (std::size_t d = 0; d < n; ++d) CHECK(pascal_column(n, d) == p.forward.col(d));
    }
    CHECK(pascal(4).inverse(3, 1) == 3);
    CHECK(pascal(4).inverse(2, 1) == -2);
}

TEST_CASE("binomial transform") {
    CHECK(binomial_transform(vec("1,1/2,1/3")) == mat("1,0,0;1/2,1/2,0;1/3,1/3,1/3"));
    Rational mu = R("5/7");
    CHECK(binomial_transform({1, mu, mu * 2 - 1}) ==
          [&] { RatMatrix m(3, 3); m(0, 0) = 1; m(1, 0) = 1 - mu; m(1, 1) = mu; m(2, 1) = (1 - mu) * 2; m(2, 2) = mu * 2 - 1; return m; }());
    CHECK(binomial_transform(vec("1,1,1")) == identity(3));
}

TEST_CASE("binomial transform equals the explicit conjugation") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 1 + rng() % 8;
        Vec lambda(n);
        for (auto& l : lambda) l = testing::random_rational(rng, -2, 2, 9);
        CHECK(pl_matrix(lambda) == testing::oracle_PL(lambda));
        CHECK(binomial_transform(lambda) * anti_identity(n) == pl_matrix(lambda));
    }
}

TEST_CASE("P^lambda reproduces family matrices") {
    CHECK(pl_matrix(vec("1,1/2,1/3,1/4")) == transition_matrix(gamma_ab(0, 0), 4).P);
    CHECK(pl_matrix(vec("1,2/3,4/9,8/27")) == transition_matrix(gamma_c(R("1/2")), 4).P);
    CHECK(pl_matrix(vec("1")) == mat("1"));
}

TEST_CASE("stochastic sums") {
    CHECK(stochastic_sums(vec("1,1/2,1/3,1/4")) == vec("1/4,1/12,1/12,1/4"));
    CHECK(is_stochastic(vec("1,1/2,1/3,1/4")).stochastic);
    auto v = is_stochastic(vec("1,1/2,1/2,3/4"));
    CHECK_FALSE(v.stochastic);
    CHECK(v.witness == std::optional<std::size_t>(1));
    CHECK(stochastic_sums(vec("1,3/5,3/10,1/20")) == vec("1/20,1/4,1/20,1/20"));
    CHECK(is_stochastic(vec("1,3/5,3/10,1/20")).stochastic);
    auto off = is_stochastic(vec("2,1/2"));
    CHECK_FALSE(off.stochastic);
    CHECK_FALSE(off.witness.has_value());
}

TEST_CASE("stochastic criterion agrees with the entrywise check") {
    std::mt19937_64 rng(29);
    int positives = 0;
    for (int trial = 0; trial < 400; ++trial) {
        std::size_t n = 3 + rng() % 4;
        Vec lambda(n);
        lambda[0] = 1;
        for (std::size_t d = 1; d < n; ++d) lambda[d] = testing::random_rational(rng, 0, 1, 6);
        bool direct = testing::oracle_stochastic(testing::oracle_PL(lambda));
        positives += direct;
        CHECK(is_stochastic(lambda).stochastic == direct);
        CHECK(is_stochastic_direct(lambda) == direct);
    }
    CHECK(positives > 0);
}

TEST_CASE("ergodicity from lambda") {
    CHECK(is_ergodic_lambda(vec("1,1/2,1/3,1/4")));
    CHECK_FALSE(is_ergodic_lambda(vec("1,1/2,0")));
    CHECK_THROWS_AS(is_ergodic_lambda(vec("1,1/2,0,0")), NotStochastic);
    // 0 is reachable from everywhere, yet state 1 is transient
    CHECK(reachable_from_all(pl_matrix(vec("1,2/3,2/3")), 0));
    CHECK_FALSE(is_ergodic_lambda(vec("1,2/3,2/3")));
    CHECK_FALSE(is_ergodic_lambda(vec("1,1")));
    CHECK_THROWS_AS(is_ergodic_lambda(vec("1,1/2,1/2,3/4")), NotStochastic);
}

TEST_CASE("ergodicity from lambda agrees with the graph check") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t n = 2 + rng() % 5;
        Vec lambda(n);
        lambda[0] = 1;
        for (std::size_t d = 1; d < n; ++d) lambda[d] = testing::random_rational(rng, 0, 1, 4);
        if (!is_stochastic(lambda)) continue;
        CHECK(is_ergodic_lambda(lambda) == ergodicity(pl_matrix(lambda)).ergodic);
    }
}

TEST_CASE("anti-diagonal eigenvalue properties") {
    RatMatrix H = transition_matrix(gamma_ab(0, 0), 4).H;
    CHECK(check_adep(H));
    CHECK(check_gadep(H));
    CHECK(is_binomial_transform(H));
    CHECK(is_binomial_transform(transition_matrix(delta_ab(4, 2), 4).H));
    CHECK(is_binomial_transform(transition_matrix(gamma_ab(1, 0), 4).H));
    CHECK(is_binomial_transform(identity(5)));
    RatMatrix L = gadep_counterexample(Counterexample::L4, 1);
    CHECK(L.row(3) == vec("-9/20,19/10,7/20,1/5"));
    CHECK(check_adep(L));
    CHECK(check_gadep(L));
    CHECK_FALSE(is_binomial_transform(L));
    CHECK(gadep_counterexample(Counterexample::L4, 0) == binomial_transform(vec("1,2/3,1/4,1/5")));
    for (auto tau : {R("1/4"), R("1/2"), R("1")}) {
        RatMatrix H5 = gadep_counterexample(Counterexample::H5, tau);
        CHECK(check_gadep(H5));
        CHECK_FALSE(is_binomial_transform(H5));
    }
    // 2x2 hand case: LJ has char poly X^2 - X + 1, while (-1)^d L_dd would give (X - 1)^2
    CHECK_FALSE(check_adep(mat("1,0;1,-1")));
}

TEST_CASE("every binomial transform has the global property") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 1 + rng() % 7;
        Vec lambda(n);
        for (auto& l : lambda) l = testing::random_rational(rng, -3, 3, 5);
        RatMatrix H = binomial_transform(lambda);
        auto rep = property_report(H);
        CHECK(rep.gadep);
        CHECK(rep.adep);
        CHECK(rep.is_binomial_transform);
    }
}

TEST_CASE("conjugators") {
    CHECK(check_conjugator(pascal(4).forward, true));
    RatMatrix B5 = pascal(5).forward;
    B5(4, 2) = 7;
    CHECK_FALSE(check_conjugator(B5, true));
    CHECK_FALSE(check_conjugator(identity(2), true));
    CHECK_THROWS_AS(check_conjugator(mat("1,0;1,0"), false), Singular);
}
