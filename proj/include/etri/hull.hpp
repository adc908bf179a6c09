#pragma once

#include "etri/bivariate.hpp"
#include "etri/rational_function.hpp"
#include "etri/series.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <vector>

namespace etri::hull {

using Real = boost::multiprecision::mpfr_float;

// decimal digits used by the numeric routes (default 50)
void set_precision(int decimal_digits);
int precision();

// ---------------------------------------------------------------------------
// Exact series routes for the hull generating function H_k(alpha, d).
// Series live in g with coefficients in Z[alpha^2] (aux variable = alpha^2).

// Iterated-kernel route: K applied (k-d) times to alpha^2 T_d minus the same
// with T_{d-1}. d = 1 returns G_k with no alpha dependence.
BivariateSeries H_series_iterated(int k, int d, int order);

// Closed-form route: the lambda-deformed slice series with nu = lambda x^{d-1}
// solved as a power series in x over Z[alpha^2], then composed with x(g).
BivariateSeries H_series_closed(int k, int d, int order);

// The kernel as an operator on g-series (scalar or with alpha^2 coefficients):
// sum_p K_p(g) X^p.
RatSeries kernel_on_series(const std::vector<RatSeries>& kp, const RatSeries& x);
BivariateSeries kernel_on_series(const std::vector<RatSeries>& kp, const BivariateSeries& x);

// Unrescaled kernel coefficients K_p(g), p = 0..P, at the given order.
std::vector<RatSeries> kernel_series(int P, int order);

// lambda-deformed slice series (the generalized identity's two sides):
// x(1+x+x^2)/(1+x^2)^2 (1-l x^{j-1})(1-l x^{j+5}) / ((1-l x^{j+1})(1-l x^{j+3}))
// as a series in g for rational lambda.
RatSeries deformed_t_series(int level, const Rational& lambda, int order);

// ---------------------------------------------------------------------------
// Numeric closed forms.

struct LambdaSolution {
    Real alpha;
    int d = 0;
    Real x;
    Real lambda;          // branch continuous in alpha with lambda(1,d) = 1
    Real companion_root;  // the other root; lambda * companion * x^{2d+4} = 1
    Real residual;        // defining quadratic evaluated at lambda
};
LambdaSolution lambda_of(const Real& alpha, int d, const Real& x);

Real H_closed(int k, int d, const Real& alpha, const Real& x);
// the same value through the single combined display (cross-check)
Real H_closed_combined(int k, int d, const Real& alpha, const Real& x);

// ---------------------------------------------------------------------------
// Singular structure at g* = 1/8 (x = (1-eps)/(1+eps), g = (1-eps^4)/8).

struct EpsilonStructure {
    Rational c0, c4, c6;  // even eps-coefficients; odd and eps^2 vanish
};
// exact route for rational functions of x; throws if the eps^2 or an odd
// coefficient is nonzero
EpsilonStructure singular_coeff(const RationalFunction& f);

// numeric eps-jet of H_k(alpha, d) (coefficients eps^0..eps^{len-1})
std::vector<Real> H_epsilon_jet(int k, int d, const Real& alpha, int len = 8);

// E_k(alpha^{L(d)}) = [eps^6] H_k(alpha,d) / [eps^6] G_k
Real E_k_alpha(int k, int d, const Real& alpha);

// ---------------------------------------------------------------------------
// Hull perimeter statistics.

Real E_inf_alpha(const Real& alpha, int d);   // d >= 2, 0 <= alpha <= 1
Rational E_inf_mean(int d);                   // E_inf(L(d)), exact
Rational p_inf(int d, int p);                 // P(L(d) = 2p), exact
Integer binomial_a(int p);                    // A(p) in the p_inf formula

struct ProbabilityTotal {
    Real total;
    Real tail_bound;
    int terms = 0;
};
ProbabilityTotal p_inf_total(int d, double term_floor = 1e-15);

RationalFunction E_k_mean_in_k(int d);  // the finite-k expectation, rational in k
Rational E_k_mean(int k, int d);        // 2 <= d <= k-1
Rational E_k_mean_limit(int d);         // k -> infinity limit (leading coefficients)

// limit laws, scaling factor c = 1/4
Real laplace_limit(const Real& tau);               // (1 + c tau)^{-3/2}
Real density_limit(const Real& L);                 // (2/sqrt(pi)) sqrt(L) c^{-3/2} e^{-L/c}
Real u_limit(const Real& u);                       // (3c/2)(1 + u - 3u^6 + u^7)
Real E_inf_laplace(int d, const Real& tau);        // E_inf(e^{-tau L(d)}) at finite d
struct DensityQuadrature {
    Real integral;  // should be 1
    Real mean;      // should be 3c/2 = 3/8
};
DensityQuadrature density_quadrature();

}  // namespace etri::hull
