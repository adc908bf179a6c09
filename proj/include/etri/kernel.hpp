#pragma once

#include "etri/bivariate.hpp"
#include "etri/series.hpp"

#include <vector>

namespace etri {

// The rescaled closed system for phi(t,G) and omega(t,G),
//   omega = (G/t) [ (t+1)phi/(1-(t+1)phi) - h4/(1-h4) ]
//   phi   = G + (G/t) [ t omega/(1-(t+1)omega)
//                       + (phi - h4 + t omega h4) / ((1-h4)(1-(t+1)omega)) ]
// with h4 = phi(t=0), solved order by order in G, and the slice recursion
//   t_k = (t_{k-1}+1) phi(t_{k-1}) / (1 - (t_{k-1}+1) phi(t_{k-1})).

struct PhiOmegaSolution {
    BivariateSeries phi;    // main var "G", aux var "t"
    BivariateSeries omega;  // id.
    RatSeries h4;           // series in G
    int sweeps = 0;
};

PhiOmegaSolution solve_phi_omega(int order_G, int order_t);

// One kernel step on a series in G with zero constant term.
RatSeries kernel_apply(const BivariateSeries& phi, const RatSeries& t_in);

// t_1 = 0, t_k = kernel_apply(phi, t_{k-1}); returns t_1..t_kmax as G-series.
std::vector<RatSeries> iterate_t(const BivariateSeries& phi, int kmax);

// Rescaled kernel kappa(t,G) = (t+1)phi / (1 - (t+1)phi); K(T) = R_1 kappa(T/R_1).
BivariateSeries rescaled_kernel(const BivariateSeries& phi);

struct KernelSeries {
    std::vector<RatSeries> coefficients;  // K_p(g), p = 0..P
    bool rescaled = false;                // provenance: these are unrescaled K_p in g
};

// Unrescaled kernel coefficients K_p(g) from the rescaled solution and R_1(g):
// K_p(g) = R_1(g)^{1-p} [t^p]kappa evaluated at G = g R_1(g)^2.
KernelSeries kernel_coefficients(const BivariateSeries& phi, const RatSeries& r1_of_g, int P);

// G(g) = g R_1(g)^2, the rescaling of the face weight.
RatSeries big_g_of_g(const RatSeries& r1_of_g);

}  // namespace etri
