#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "involute/errors.hpp"
#include "involute/polynomial.hpp"
#include "involute/spectral.hpp"
#include "involute/transform.hpp"
#include "involute/walk.hpp"
#include "support.hpp"

using namespace involute;
using testing::R;
using testing::vec;

namespace {

bool proportional(const Vec& u, const Vec& v) {
    if (u.size() != v.size()) return false;
    std::size_t k = 0;
    while (k < u.size() && u[k].is_zero()) ++k;
    if (k == u.size()) return false;
    Rational s = v[k] / u[k];
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] * s != v[i]) return false;
    return true;
}

Vec row_times(const Vec& u, const RatMatrix& P) {
    Vec out(P.cols());
    for (std::size_t z = 0; z < P.cols(); ++z)
        for (std::size_t x = 0; x < P.rows(); ++x) out[z] += u[x] * P(x, z);
    return out;
}

Vec mat_times(const RatMatrix& P, const Vec& v) {
    Vec out(P.rows());
    for (std::size_t x = 0; x < P.rows(); ++x)
        for (std::size_t z = 0; z < P.cols(); ++z) out[x] += P(x, z) * v[z];
    return out;
}

Vec scaled(Vec v, const Rational& s) {
    for (auto& x : v) x *= s;
    return v;
}

}  // namespace

TEST_CASE("closed-form eigenvalues") {
    CHECK(eigenvalues_closed_form(gamma_ab(0, 0), 4) == vec("1,-1/2,1/3,-1/4"));
    CHECK(eigenvalues_closed_form(gamma_c(R("1/2")), 4) == vec("1,-2/3,4/9,-8/27"));
    CHECK(eigenvalues_closed_form(delta_ab(4, 2), 4) == vec("1,-3/4,1/2,-1/4"));
}

TEST_CASE("char poly equals the eigenvalue product") {
    std::vector<WeightSpec> specs;
    for (const auto& a : testing::ab_grid())
        for (const auto& b : testing::ab_grid()) specs.push_back(gamma_ab(a, b));
    for (const auto& c : testing::c_grid()) specs.push_back(gamma_c(c));
    for (const auto& [a, b] : testing::delta_grid()) specs.push_back(delta_ab(a, b));
    for (const auto& s : specs) {
        std::size_t lim = std::min<std::size_t>(domain_limit(s).value_or(7), 7);
        for (std::size_t n = 2; n <= lim; ++n) {
            auto ev = testing::oracle_signed_eigenvalues(s, n);
            CHECK(eigenvalues_closed_form(s, n) == ev);
            CHECK_MESSAGE(testing::oracle_charpoly(transition_matrix(s, n).P) == testing::oracle_from_roots(ev),
                          describe(s) << " n=" << n);
        }
    }
}

TEST_CASE("right eigenvectors") {
    auto es = right_eigenvectors(gamma_ab(0, 0), 4);
    CHECK(es.right[0] == vec("1,1,1,1"));
    CHECK(es.eigenvalues[0] == 1);
    CHECK(proportional(es.right[1], vec("2,1,0,-1")));
    auto e3 = right_eigenvectors(gamma_ab(0, 0), 3);
    auto P3 = transition_matrix(gamma_ab(0, 0), 3).P;
    CHECK(mat_times(P3, e3.right[2]) == scaled(e3.right[2], R("1/3")));
    CHECK_THROWS_AS(right_eigenvectors(gamma_c(1), 3), UnsupportedFamily);
}

TEST_CASE("eigenvectors are exact, orthogonal and of the right degree") {
    for (const char* as : {"0", "1/2", "1", "2"})
        for (const char* bs : {"0", "1/2", "1", "2"})
            for (std::size_t n : {2u, 5u, 8u}) {
                auto spec = gamma_ab(R(as), R(bs));
                auto es = right_eigenvectors(spec, n);
                auto P = transition_matrix(spec, n).P;
                for (std::size_t d = 0; d < n; ++d) {
                    CHECK(mat_times(P, es.right[d]) == scaled(es.right[d], es.eigenvalues[d]));
                    CHECK(row_times(es.left[d], P) == scaled(es.left[d], es.eigenvalues[d]));
                    CHECK(pascal_degree(es.right[d]) == long(d));
                    for (std::size_t e = 0; e < d; ++e) CHECK(pi_inner(es.pi, es.right[d], es.right[e]).is_zero());
                }
            }
}

TEST_CASE("left eigenvectors from right ones") {
    auto pi = vec("1/10,1/5,3/10,2/5");
    CHECK(proportional(left_from_right(pi, vec("1,1,1,1")), pi));
    auto es = right_eigenvectors(gamma_ab(0, 0), 4);
    auto u = left_from_right(pi, es.right[1]);
    CHECK(proportional(u, vec("1,1,0,-2")));
    CHECK(proportional(left_from_right(pi, es.right[3]), final_left_eigenvector(4)));
}

TEST_CASE("final left eigenvector") {
    CHECK(final_left_eigenvector(3) == vec("1,-2,1"));
    CHECK(final_left_eigenvector(4) == vec("1,-3,3,-1"));
    auto P3 = transition_matrix(gamma_ab(0, 0), 3).P;
    CHECK(row_times(final_left_eigenvector(3), P3) == scaled(vec("1,-2,1"), R("1/3")));
    CHECK(final_left_eigenvalue(0, 0, 4) == R("-1/4"));
    CHECK(final_left_eigenvalue(1, 0, 4) == R("-2/5"));
    for (const char* as : {"0", "1/2", "1", "2"})
        for (const char* bs : {"0", "1/2", "1", "2"})
            for (std::size_t n = 1; n <= 10; ++n) {
                auto P = transition_matrix(gamma_ab(R(as), R(bs)), n).P;
                auto u = final_left_eigenvector(n);
                CHECK(row_times(u, P) == scaled(u, final_left_eigenvalue(R(as), R(bs), n)));
            }
}

TEST_CASE("integer clearing") {
    CHECK(integer_cleared(vec("1/2,-1/3,0")) == vec("3,-2,0"));
    CHECK(integer_cleared(vec("-4,6")) == vec("2,-3"));
}

TEST_CASE("mixing") {
    CHECK(mixing_report(gamma_ab(0, 0), 8).second_abs_eigenvalue == R("1/2"));
    CHECK(mixing_report(gamma_c(1), 6).second_abs_eigenvalue == R("1/2"));
    CHECK(mixing_report(delta_ab(4, 2), 4).second_abs_eigenvalue == R("3/4"));
    auto m = mixing_report(gamma_ab(0, 0), 8);
    CHECK(m.empirical_rate == doctest::Approx(0.5).epsilon(0.05));
}
