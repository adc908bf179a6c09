#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "etri/classical.hpp"
#include "etri/closed_form.hpp"
#include "etri/kernel.hpp"

using namespace etri;

namespace {

RatSeries paper_h4(int order) {
    // small-G expansion of h~_4
    std::vector<long> v = {0, 1, 0, 1, 3, 9, 31, 114, 435, 1713, 6924};
    std::vector<Rational> c;
    for (int i = 0; i <= order && i < static_cast<int>(v.size()); ++i) c.push_back(v[i]);
    return RatSeries("G", std::move(c));
}

BivariateSeries lift(const RatSeries& s, int cap) { return BivariateSeries::from_scalar_series(s, "t", cap); }

}  // namespace

TEST_CASE("h4 reproduces the small-G expansion") {
    PhiOmegaSolution sol = solve_phi_omega(10, 10);
    CHECK(sol.h4 == paper_h4(10));
    CHECK(sol.phi.coeff(1) == RatPoly(Rational(1)));  // phi = G + O(G^2)
    CHECK(sol.omega.aux_at_zero().truncated(2) == RatSeries("G", std::vector<Rational>{0, 0, 1}));
}

TEST_CASE("t-budget spot check") {
    PhiOmegaSolution a = solve_phi_omega(8, 8);
    PhiOmegaSolution b = solve_phi_omega(8, 10);
    CHECK(a.h4 == b.h4);
    CHECK(a.phi == b.phi.truncated(8, 8));
    CHECK(a.omega == b.omega.truncated(8, 8));
}

TEST_CASE("system residuals vanish") {
    int N = 9;
    PhiOmegaSolution sol = solve_phi_omega(N, N);
    BivariateSeries one("G", "t", N, N);
    one.set_coeff(0, RatPoly(Rational(1)));
    BivariateSeries G("G", "t", N, N);
    G.set_coeff(1, RatPoly(Rational(1)));
    BivariateSeries tp1 =
        BivariateSeries::from_aux_poly(RatPoly(std::vector<Rational>{1, 1}), "G", "t", N, N);
    BivariateSeries h4 = lift(sol.h4, N);
    const BivariateSeries& phi = sol.phi;
    const BivariateSeries& omega = sol.omega;

    // Cross-multiplied forms of the two equations (division-free).
    BivariateSeries r1 = omega.mul_aux() * (one - tp1 * phi) * (one - h4) -
                         G * (tp1 * phi * (one - h4) - h4 * (one - tp1 * phi));
    CHECK(r1.is_zero());

    BivariateSeries r2 = (phi - G).mul_aux() * (one - tp1 * omega) * (one - h4) -
                         G * (omega.mul_aux() * (one - h4) + (phi - h4 + omega.mul_aux() * h4));
    CHECK(r2.is_zero());
}

TEST_CASE("kernel at the origin gives t_2") {
    int N = 10;
    PhiOmegaSolution sol = solve_phi_omega(N, N);
    RatSeries zero("G", N);
    RatSeries t2 = kernel_apply(sol.phi, zero);
    RatSeries one = RatSeries::constant("G", 1, N);
    CHECK(t2 == sol.h4 / (one - sol.h4));
    // first coefficients derived from the paper h4 series by direct division
    CHECK(t2.coeff(1) == 1);
    CHECK(t2.coeff(2) == 1);
    CHECK(t2.coeff(3) == 2);
    CHECK(t2.coeff(4) == 6);

    // empty kernel
    BivariateSeries zphi("G", "t", N, N);
    CHECK(kernel_apply(zphi, zero).is_zero());
    CHECK_THROWS_AS(kernel_apply(sol.phi, one), std::domain_error);
}

TEST_CASE("recursion equivalence with the classical route") {
    int order = 12, kmax = 6;
    PhiOmegaSolution sol = solve_phi_omega(order, order);
    std::vector<RatSeries> t = iterate_t(sol.phi, kmax);
    CHECK(t[0].is_zero());

    SliceSeriesTable cls = solve_classical(kmax, order);
    RatSeries r1 = cls.R(1);
    RatSeries Gg = big_g_of_g(r1);
    for (int k = 1; k <= kmax; ++k) {
        RatSeries tk_g = series_compose(RatSeries("g", t[k - 1].coeffs()), Gg);
        RatSeries rk = r1 * (tk_g + RatSeries::constant("g", 1, order));
        CHECK(rk == cls.R(k));
        for (int n = 0; n <= order; ++n) CHECK(t[k - 1].coeff(n) >= 0);
    }
}

TEST_CASE("t_k closed forms drive the kernel recursion") {
    int N = 10;
    PhiOmegaSolution sol = solve_phi_omega(N, N);
    RatSeries xg = closed_form::x_of_big_g(N);
    for (int k = 2; k <= 5; ++k) {
        RatSeries tk = series_compose(RatSeries("G", closed_form::tk_rescaled(k).expand(N).coeffs()), xg);
        RatSeries tk1 =
            series_compose(RatSeries("G", closed_form::tk_rescaled(k + 1).expand(N).coeffs()), xg);
        CHECK(kernel_apply(sol.phi, tk) == tk1);
    }
}

TEST_CASE("kernel coefficients and the omega identity") {
    int N = 10;
    PhiOmegaSolution sol = solve_phi_omega(N, N);
    SliceSeriesTable cls = solve_classical(1, N);
    RatSeries r1 = cls.R(1);
    KernelSeries ks = kernel_coefficients(sol.phi, r1, 6);
    CHECK_FALSE(ks.rescaled);
    CHECK(ks.coefficients[0].coeff(1) == 1);  // [g] K_0 = 1
    for (const auto& kp : ks.coefficients)
        for (int n = 0; n <= N; ++n) {
            CHECK(kp.coeff(n) >= 0);
            CHECK(is_integer(kp.coeff(n)));
        }

    // omega t = G (kappa - kappa(0)) — the rescaled form of
    // Omega(T) = (g/T)(K(T) - K(0)).
    BivariateSeries kappa = rescaled_kernel(sol.phi);
    BivariateSeries G("G", "t", N, N);
    G.set_coeff(1, RatPoly(Rational(1)));
    CHECK(sol.omega.mul_aux() == G * (kappa - lift(kappa.aux_at_zero(), N)));

    // unrescaled: f_{2i}(g) = g K_{i-1}(g), with f_{2i} = f~_{2i}(G(g)) / R_1^i
    RatSeries g = RatSeries::identity("g", N);
    RatSeries Gg = big_g_of_g(r1);
    RatSeries r1inv = RatSeries::constant("g", 1, N) / r1;
    for (int i = 2; i <= 4; ++i) {
        RatSeries f_tilde = sol.omega.aux_coefficient(i - 2);
        RatSeries f = series_compose(RatSeries("g", f_tilde.coeffs()), Gg);
        for (int j = 0; j < i; ++j) f = f * r1inv;
        CHECK(f == g * ks.coefficients[i - 1]);
    }

    // h~_{2i} and f~_{2i} count maps: nonnegative integer coefficients
    for (int i = 2; i <= 6; ++i) {
        RatSeries h = sol.phi.aux_coefficient(i - 2);
        RatSeries f = sol.omega.aux_coefficient(i - 2);
        for (int n = 0; n <= N; ++n) {
            CHECK(h.coeff(n) >= 0);
            CHECK(is_integer(h.coeff(n)));
            CHECK(f.coeff(n) >= 0);
            CHECK(is_integer(f.coeff(n)));
        }
    }
}

TEST_CASE("parametric agreement of h4 with the C form") {
    int N = 16;
    PhiOmegaSolution sol = solve_phi_omega(N + 1, N + 1);
    // Coefficient ratios of h4 increase towards 1/G* = 128/25; q = 26/5 is a
    // safe geometric majorant for the tail.
    Rational q(26, 5);
    for (Rational c : {Rational(1, 10), Rational(1, 4), Rational(1, 3)}) {
        Rational Gc = closed_form::big_g_of_c().eval<Rational>(c);
        REQUIRE(q * Gc < 1);
        Rational h4c = closed_form::h4_of_c().eval<Rational>(c);
        Rational sum = 0, Gp = 1;
        for (int n = 0; n <= N; ++n) {
            sum += sol.h4.coeff(n) * Gp;
            Gp *= Gc;
        }
        // |tail| <= c_{N+1} G^{N+1} / (1 - qG), exactly
        Rational bound = sol.h4.coeff(N + 1) * Gp / (Rational(1) - q * Gc);
        Rational err = h4c - sum;
        if (err < 0) err = -err;
        CHECK(err <= bound);
    }
}
