#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "involute/classify.hpp"
#include "involute/spectral.hpp"
#include "involute/transform.hpp"
#include "involute/walk.hpp"
#include "support.hpp"

using namespace involute;
using testing::R;
using testing::vec;

TEST_CASE("parameters from the first two eigenvalues") {
    CHECK(params_from_mu_nu(R("2/3"), R("1/2"), 4) == Classification(cls::GammaAB{1, 0}));
    CHECK(params_from_mu_nu(R("1/3"), R("1/9"), 4) == Classification(cls::GammaC{2}));
    CHECK(params_from_mu_nu(R("2/3"), R("10/23"), 10) == Classification(cls::DeltaIntegerM{17, 9}));
    CHECK_FALSE(is_classified(params_from_mu_nu(R("2/3"), R("2/5"), 10)));
}

TEST_CASE("returned parameters reproduce mu and nu") {
    std::mt19937_64 rng(41);
    int hits = 0;
    for (int trial = 0; trial < 300; ++trial) {
        Rational mu = testing::random_rational(rng, 0, 1, 12), nu = testing::random_rational(rng, 0, 1, 12);
        if (mu.is_zero() || mu == 1 || !(nu < mu)) continue;
        auto c = params_from_mu_nu(mu, nu, 4);
        auto w = to_weight(c);
        if (!w) continue;
        ++hits;
        auto lam = family_lambda(*w, 3);
        CHECK(lam[1] == mu);
        CHECK(lam[2] == nu);
    }
    CHECK(hits > 20);
}

TEST_CASE("exceptional ladder") {
    auto l = exceptional_ladder(R("2/3"), 10);
    REQUIRE(l.size() == 4);
    const long ms[] = {9, 8, 7, 6};
    const char* nus[] = {"10/23", "13/30", "22/51", "3/7"};
    const long as[] = {17, 15, 13, 11};
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(l[i].m == ms[i]);
        CHECK(l[i].nu == R(nus[i]));
        CHECK(l[i].a_prime == as[i]);
    }
    bool has2 = false;
    for (const auto& r : exceptional_ladder(R("2/3"), 3)) has2 |= r.m == 2 && r.nu == R("1/3") && r.a_prime == 3;
    CHECK(has2);
    const char* fig[] = {"1/3", "2/5", "5/12", "14/33", "3/7"};
    for (long m = 2; m <= 6; ++m) CHECK(nu_ladder(R("2/3"), m) == R(fig[m - 2]));
}

TEST_CASE("ladder values increase towards mu squared") {
    for (const char* ms : {"2/3", "3/5", "5/6", "7/10"}) {
        Rational mu = R(ms);
        for (long m = 2; m < 40; ++m) {
            CHECK(nu_ladder(mu, m) < nu_ladder(mu, m + 1));
            CHECK(nu_ladder(mu, m + 1) < mu * mu);
        }
    }
}

TEST_CASE("global reversibility") {
    CHECK(is_globally_reversible(vec("1,1/2,1/3,1/4,1/5")));
    CHECK_FALSE(is_globally_reversible(vec("1,3/5,3/10,1/20")));
    CHECK(is_globally_reversible(vec("1,2/3,1/3")));
}

TEST_CASE("classify walks from eigenvalues") {
    CHECK(classify_walk(vec("1,1/2,1/3,1/4")) == Classification(cls::GammaAB{0, 0}));
    CHECK(classify_walk(vec("1,2/3,4/9,8/27")) == Classification(cls::GammaC{R("1/2")}));
    auto d = to_weight(classify_walk(vec("1,3/4,1/2,1/4")));
    REQUIRE(d.has_value());
    CHECK(family_lambda(*d, 4) == vec("1,3/4,1/2,1/4"));
    CHECK(classify_walk(vec("1,1/2,3/10,1/5")) == Classification(cls::GammaAB{1, 1}));
    CHECK_FALSE(is_classified(classify_walk(vec("1,3/5,3/10,1/20"))));
}

TEST_CASE("classification inverts the family eigenvalues") {
    for (std::size_t n = 3; n <= 8; ++n) {
        for (const auto& a : testing::ab_grid())
            for (const auto& b : testing::ab_grid()) {
                auto c = classify_walk(family_lambda(gamma_ab(a, b), n));
                CHECK_MESSAGE(c == Classification(cls::GammaAB{a, b}), describe(c) << " n=" << n);
            }
        for (const auto& cc : testing::c_grid())
            CHECK(classify_walk(family_lambda(gamma_c(cc), n)) == Classification(cls::GammaC{cc}));
        for (auto [ap, bp] : {std::pair{4, 2}, std::pair{5, 3}}) {
            auto spec = delta_ab(ap, bp);
            if (n > *domain_limit(spec)) continue;
            auto w = to_weight(classify_walk(family_lambda(spec, n)));
            REQUIRE(w.has_value());
            CHECK(transition_matrix(*w, n).P == transition_matrix(spec, n).P);
        }
    }
}

TEST_CASE("candidate evaluation") {
    auto rec = evaluate_candidate(vec("1,1/2,3/10,1/5"));
    CHECK(rec.stochastic);
    CHECK(rec.reversible);
    CHECK(rec.classification == Classification(cls::GammaAB{1, 1}));
    auto bad = evaluate_candidate(vec("1,3/5,3/10,1/20"));
    CHECK(bad.stochastic);
    CHECK_FALSE(bad.reversible);
    auto flip = evaluate_candidate(vec("1,1,1"));
    CHECK(flip.reversible);
    CHECK(flip.classification == Classification(cls::Identity{}));
}

TEST_CASE("reversible grid points classify, n = 3 with step 1/10") {
    for (long i = 0; i <= 10; ++i)
        for (long j = 0; j <= 10; ++j) {
            Vec lambda{1, Rational(i, 10), Rational(j, 10)};
            auto rec = evaluate_candidate(lambda);
            if (!rec.reversible) continue;
            CHECK_MESSAGE(is_classified(rec.classification), lambda[1] << "," << lambda[2]);
            bool balance = testing::oracle_balance(pl_matrix(lambda), *positive_reversible(pl_matrix(lambda)));
            CHECK(balance);
        }
}

TEST_CASE("search is deterministic and thread-count independent") {
    SearchConfig cfg;
    cfg.samples = 60;
    cfg.threads = 1;
    auto one = conjecture_search(6, cfg);
    cfg.threads = 3;
    auto three = conjecture_search(6, cfg);
    REQUIRE(one.records.size() == three.records.size());
    for (std::size_t i = 0; i < one.records.size(); ++i) CHECK(one.records[i].lambda == three.records[i].lambda);
    CHECK(one.unclassified_reversible == 0);
    CHECK(configured_threads(2) == 2);
}
