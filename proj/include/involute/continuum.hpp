#pragma once

#include "involute/rational.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace involute::continuum {

struct QuadratureConfig {
    double tolerance = 1e-10;        // absolute
    double rel_tolerance = 1e-13;    // relative, whichever is looser
    std::size_t node_budget = std::size_t{1} << 15;
};

// Adaptive Gauss-Legendre with interval bisection. Throws
// QuadratureNonConvergence once the node budget is spent.
double integrate(const std::function<double(double)>& f, double lo, double hi, const QuadratureConfig& cfg = {});

struct ContinuousWalk {
    enum class Kind { Kappa, Trig };
    Kind kind = Kind::Kappa;
    int a = 0, b = 0;  // Kappa exponents: weight y^a (x-y)^b on [0, x]
    QuadratureConfig quadrature;

    static ContinuousWalk kappa(int a, int b);
    static ContinuousWalk trig();
};

// Polynomial in x, or cosine series sum_k c_k cos(k pi x).
struct PolyFunction {
    enum class Basis { Monomial, Cosine };
    Basis basis = Basis::Monomial;
    std::vector<double> coeffs;
    double operator()(double x) const;
};

double kappa_norm(int a, int b, double x);
// Normalizer of the walk's down-step weight at x.
double walk_norm(const ContinuousWalk& w, double x);
// Density of stepping from x to z (zero unless x + z >= 1).
double transition_density(const ContinuousWalk& w, double x, double z);

double lp_apply(const ContinuousWalk& w, const std::function<double(double)>& f, double x);
inline double lp_apply(const ContinuousWalk& w, const PolyFunction& f, double x) {
    return lp_apply(w, std::function<double(double)>(f), x);
}
// Down-step operator of the Kappa walk (no reflection).
double lh_apply(const ContinuousWalk& w, const std::function<double(double)>& f, double x);

// Exact moment of (1-x)^a x^(a+b+1+k) over [0, 1].
Rational weight_moment(int a, int b, int k);

std::vector<PolyFunction> jacobi_eigenfunctions(int a, int b, std::size_t dmax);
std::vector<PolyFunction> trig_eigenfunctions(std::size_t dmax);
std::vector<PolyFunction> eigenfunctions(const ContinuousWalk& w, std::size_t dmax);
// Signed eigenvalue attached to the degree-d eigenfunction.
double continuum_eigenvalue(const ContinuousWalk& w, std::size_t d);

// Residual grid x_k = k/101, k = 1..101.
std::vector<double> residual_grid();
double eigen_residual(const ContinuousWalk& w, std::size_t d);
double cts_invariant(const ContinuousWalk& w, double x);
double fixed_point_residual(const ContinuousWalk& w);
// <f, g> weighted by the invariant density.
double invariant_inner(const ContinuousWalk& w, const std::function<double(double)>& f, const std::function<double(double)>& g);

enum class GridScaling { ByN, ByNMinusOne };
// Sup-distance between the max-normalized discrete eigenvector of
// gamma(a,b) at size n, placed at x -> x/n (or x/(n-1)), and g_d.
std::vector<double> discrete_convergence(int a, int b, std::size_t d, const std::vector<std::size_t>& n_list,
                                         GridScaling scaling = GridScaling::ByN);

}  // namespace involute::continuum
