#pragma once

#include "etri/rational_function.hpp"
#include "etri/series.hpp"

#include <string>
#include <vector>

namespace etri::closed_form {

// Parametric closed forms. Everything is an exact rational function, either in
// the multiplier x (which parametrizes g = x(1+x^2)/(1+x)^4) or in the
// auxiliary parameter C = x/(1+x^2).

RationalFunction g_of_x();        // g(x)
RationalFunction c_of_x();        // C(x)
RationalFunction big_g_of_x();    // G(x) = g R_1^2
RationalFunction r1_of_x();       // R_1(x)
RationalFunction r_inf_of_x();    // r_infinity(x)
RationalFunction alpha_of_x();    // attracting fixed point of the homographic map
RationalFunction beta_of_x();     // repelling fixed point

RationalFunction Rk(int k);       // slice generating function, R_0 = 0
RationalFunction Tk(int k);       // T_k = R_k - R_1
RationalFunction Gk(int k);       // two-point function
RationalFunction Yk(int k);       // solution of the homographic recursion
RationalFunction rk_rescaled(int k);  // r_k = R_k / R_1
RationalFunction tk_rescaled(int k);  // t_k = r_k - 1

RationalFunction big_g_of_c();    // G(C), variable "C"
RationalFunction h4_of_c();       // h~_4(C)
RationalFunction t_line_of_c();   // t(C) on the special line

// Series reversions x(g) and x(G) (zero constant term, unit linear term).
RatSeries x_of_g(int order);
RatSeries x_of_big_g(int order);

// Named injective parametrizations with their validity intervals.
struct Parametrization {
    std::string name;
    RationalFunction forward;
    Rational lo, hi;
};
std::vector<Parametrization> parametrizations();

// Y_k = (a Y_{k-1} + b)/(c Y_{k-1} + d) with coefficients expressed in x.
struct HomographicMap {
    RationalFunction a, b, c, d;
    RationalFunction alpha, beta;  // fixed points
    RationalFunction multiplier;   // x = (c beta + d)/(c alpha + d)
};
HomographicMap yk_recursion_map();

// Identity checks for the special line t = t(G) and the h4 determination.
struct SpecialLineReport {
    bool tg_residual_zero = false;        // eq for the line t(G)
    bool h4_branches_equal = false;       // h4^(1) = h4^(2) on the line
    bool h4_matches_c_form = false;       // both equal h4(C) of the C-parametrization
    bool phi_omega_line_values_ok = false;  // phi = t/(t+1)^2, omega = (t-G(t+1)^2)/(t(t+1))
    Rational big_g_at_c_half;             // G(1/2) = 25/128
    bool all() const {
        return tg_residual_zero && h4_branches_equal && h4_matches_c_form && phi_omega_line_values_ok;
    }
};
SpecialLineReport check_special_line();

// The two branch expressions for h4 in terms of (t, phi, omega); exported for
// the special-line and system tests.
RationalFunction h4_branch1_on_line();  // in C, after substituting the line values
RationalFunction h4_branch2_on_line();

// phi as a function of Y: residual of the defining quadratic (in the two
// variables C and Y) and the t = 0 branch value.
bool phi_quadratic_residual_is_zero();
bool t_of_y_matches_quadratic();           // eq for Y has t(Y) as its inverse
RationalFunction phi_param_at_t0();        // phi(Y_1) as a function of C
bool factorized_recursion_second_factor_zero(int k);
bool factorized_recursion_first_factor_nonzero(int k, const Rational& x_sample);

}  // namespace etri::closed_form
