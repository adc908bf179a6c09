#include "etri/kernel.hpp"

#include <stdexcept>

namespace etri {

namespace {

BivariateSeries lift(const RatSeries& s, int aux_cap) {
    return BivariateSeries::from_scalar_series(s, "t", aux_cap);
}

BivariateSeries t_plus_one(int order_G, int aux_cap) {
    return BivariateSeries::from_aux_poly(RatPoly(std::vector<Rational>{1, 1}), "G", "t", order_G, aux_cap);
}

}  // namespace

PhiOmegaSolution solve_phi_omega(int order_G, int order_t) {
    if (order_G < 0 || order_t < 0) throw std::invalid_argument("orders must be >= 0");
    const int N = order_G, A = order_t;
    BivariateSeries one("G", "t", N, A);
    one.set_coeff(0, RatPoly(Rational(1)));
    BivariateSeries G("G", "t", N, A);
    if (N >= 1) G.set_coeff(1, RatPoly(Rational(1)));
    BivariateSeries tp1 = t_plus_one(N, A);

    // Seed phi = G, omega = 0. Every phi/omega occurrence on a right-hand side
    // carries a factor G, so alternating full updates settles at least one
    // G-order per round.
    BivariateSeries phi = G;
    BivariateSeries omega("G", "t", N, A);

    int sweeps = 0;
    const int max_sweeps = 2 * (N + 1) + 4;
    for (;; ++sweeps) {
        if (sweeps > max_sweeps) throw std::logic_error("phi/omega iteration failed to stabilize");
        RatSeries h4 = phi.aux_at_zero();
        BivariateSeries h4b = lift(h4, A);
        BivariateSeries kern = (tp1 * phi) / (one - tp1 * phi);
        BivariateSeries kern0 = lift(h4 / (RatSeries::constant("G", 1, N) - h4), A);
        BivariateSeries omega_next = G * (kern - kern0).div_aux();

        BivariateSeries denom = one - tp1 * omega_next;
        BivariateSeries bracket =
            omega_next.mul_aux() / denom +
            ((phi - h4b + omega_next.mul_aux() * h4b) / denom) / (one - h4b);
        BivariateSeries phi_next = G + G * bracket.div_aux();

        if (phi_next == phi && omega_next == omega) break;
        phi = phi_next;
        omega = omega_next;
    }

    PhiOmegaSolution sol;
    sol.phi = phi;
    sol.omega = omega;
    sol.h4 = phi.aux_at_zero();
    sol.sweeps = sweeps;
    return sol;
}

RatSeries kernel_apply(const BivariateSeries& phi, const RatSeries& t_in) {
    if (t_in.coeff(0) != 0) throw std::domain_error("kernel_apply needs a series with zero constant term");
    RatSeries phi_at = phi.aux_substituted(t_in);
    RatSeries one = RatSeries::constant(t_in.var(), 1, phi_at.order());
    RatSeries u = (t_in.truncated(phi_at.order()) + one) * phi_at;
    return u / (one - u);
}

std::vector<RatSeries> iterate_t(const BivariateSeries& phi, int kmax) {
    if (kmax < 1) throw std::invalid_argument("iterate_t needs kmax >= 1");
    std::vector<RatSeries> t;
    t.push_back(RatSeries(phi.main_var(), phi.main_order()));  // t_1 = 0
    for (int k = 2; k <= kmax; ++k) t.push_back(kernel_apply(phi, t.back()));
    return t;
}

BivariateSeries rescaled_kernel(const BivariateSeries& phi) {
    int N = phi.main_order(), A = phi.aux_cap();
    BivariateSeries one("G", "t", N, A);
    one.set_coeff(0, RatPoly(Rational(1)));
    BivariateSeries u = t_plus_one(N, A) * phi;
    return u / (one - u);
}

RatSeries big_g_of_g(const RatSeries& r1_of_g) {
    return RatSeries::identity(r1_of_g.var(), r1_of_g.order()) * (r1_of_g * r1_of_g);
}

KernelSeries kernel_coefficients(const BivariateSeries& phi, const RatSeries& r1_of_g, int P) {
    if (P < 0) throw std::invalid_argument("kernel_coefficients needs P >= 0");
    if (P > phi.aux_cap()) throw std::invalid_argument("P exceeds the t-truncation budget of phi");
    BivariateSeries kappa = rescaled_kernel(phi);
    RatSeries Gg = big_g_of_g(r1_of_g);
    int order = std::min(phi.main_order(), r1_of_g.order());
    RatSeries one = RatSeries::constant("g", 1, order);
    RatSeries r1 = r1_of_g.truncated(order);
    RatSeries r1_inv = one / r1;

    KernelSeries ks;
    ks.rescaled = false;
    for (int p = 0; p <= P; ++p) {
        // kappa_p as a series in G, converted to g and weighted by R_1^{1-p}
        RatSeries kp_G = kappa.aux_coefficient(p);
        RatSeries value = series_compose(kp_G, Gg.truncated(order));
        if (p == 0) value = value * r1;
        for (int j = 0; j < p - 1; ++j) value = value * r1_inv;
        ks.coefficients.push_back(value);
    }
    return ks;
}

}  // namespace etri
