#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "etri/classical.hpp"
#include "etri/closed_form.hpp"
#include "etri/epsilon.hpp"

using namespace etri;
using namespace etri::closed_form;

namespace {
RationalFunction one_x() { return RationalFunction::constant("x", 1); }
}  // namespace

TEST_CASE("R_k closed forms") {
    CHECK(Rk(0).is_zero());
    CHECK(Rk(1) == r1_of_x());
    for (int k = 1; k <= 10; ++k) CHECK(Rk(k).eval<Rational>(0) == 1);

    // the classical relation holds as an identity of rational functions
    for (int k = 1; k <= 8; ++k) {
        CHECK(Rk(k) == one_x() + g_of_x() * Rk(k) * (Rk(k + 1) + Rk(k - 1)));
    }
}

TEST_CASE("G_k closed forms") {
    CHECK(Gk(2).eval<Rational>(0) == 0);

    // product form of the final display
    for (int k = 1; k <= 8; ++k) {
        RatPoly x = RatPoly::monomial(1, 1);
        RatPoly one(Rational(1));
        auto omp = [&](int j) {  // 1 - x^j
            return one - RatPoly::monomial(1, j);
        };
        RatPoly mx = one - RatPoly::monomial(1, 1);
        RatPoly num = mx * mx * mx * RatPoly(std::vector<Rational>{1, 2, 1}) *
                      RatPoly(std::vector<Rational>{1, 1, 1}) * RatPoly::monomial(1, k - 1) *
                      omp(2 * k + 3);
        RatPoly den = RatPoly(std::vector<Rational>{1, 0, 1}) * omp(k) * omp(k + 1) * omp(k + 2) *
                      omp(k + 3);
        RationalFunction product("x", num, den);
        if (k == 1) product = product - one_x();
        CHECK(Gk(k) == product);
    }

    // sum rule: 1 + sum_{k<=K} G_k = R_K
    RationalFunction acc = one_x();
    for (int k = 1; k <= 6; ++k) {
        acc = acc + Gk(k);
        CHECK(acc == Rk(k));
    }
}

TEST_CASE("Y_k and the homographic recursion") {
    RationalFunction y1 = Yk(1);
    CHECK(y1 == -(RationalFunction("x", RatPoly(std::vector<Rational>{1, 1, 1}),
                                   RatPoly(std::vector<Rational>{1, 0, 1}))));

    HomographicMap m = yk_recursion_map();
    CHECK(m.multiplier == RationalFunction::identity("x"));
    CHECK(m.alpha == alpha_of_x());
    CHECK(m.beta == beta_of_x());

    // fixed points satisfy f(Y) = Y
    for (const RationalFunction& fp : {m.alpha, m.beta}) {
        CHECK((m.a * fp + m.b) / (m.c * fp + m.d) == fp);
    }
    // trace/determinant relations: alpha beta and alpha + beta
    CHECK(m.alpha * m.beta == -m.b / m.c);
    RationalFunction C = c_of_x();
    CHECK(m.alpha + m.beta == -(C + one_x()));  // a - d = -c(alpha+beta) with c = -1

    for (int k = 2; k <= 10; ++k) {
        CHECK(Yk(k) == (m.a * Yk(k - 1) + m.b) / (m.c * Yk(k - 1) + m.d));
        RationalFunction wk = (Yk(k) - m.alpha) / (Yk(k) - m.beta);
        RationalFunction wkm = (Yk(k - 1) - m.alpha) / (Yk(k - 1) - m.beta);
        CHECK(wk == RationalFunction::identity("x") * wkm);
    }
}

TEST_CASE("factorized recursion") {
    for (int k = 2; k <= 8; ++k) {
        CHECK(factorized_recursion_second_factor_zero(k));
        CHECK(factorized_recursion_first_factor_nonzero(k, Rational(1, 3)));
    }
}

TEST_CASE("x <-> 1/x symmetry") {
    for (int k = 1; k <= 10; ++k) {
        CHECK(Rk(k) == Rk(k).reciprocal_substituted());
        CHECK(Gk(k) == Gk(k).reciprocal_substituted());
        CHECK(Tk(k) == Tk(k).reciprocal_substituted());
    }
    CHECK(g_of_x() == g_of_x().reciprocal_substituted());
    CHECK(big_g_of_x() == big_g_of_x().reciprocal_substituted());
}

TEST_CASE("parametrization consistency") {
    CHECK(big_g_of_c().substituted(c_of_x()) == big_g_of_x());
    CHECK(g_of_x() * r1_of_x() * r1_of_x() == big_g_of_x());
    CHECK(r1_of_x() * rk_rescaled(3) == Rk(3));
    CHECK(tk_rescaled(1).is_zero());
    CHECK(Tk(4) == r1_of_x() * tk_rescaled(4));

    // injectivity on the stated intervals: derivative keeps one sign
    for (const auto& p : parametrizations()) {
        RationalFunction d = p.forward.derivative();
        Rational width = p.hi - p.lo;
        int sign = 0;
        for (int i = 1; i <= 7; ++i) {
            Rational at = p.lo + width * Rational(i, 8);
            Rational v = d.eval<Rational>(at);
            int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
            REQUIRE(s != 0);
            if (sign == 0) sign = s;
            CHECK(s == sign);
        }
    }

    // R_1(x) r_infinity(x) = R_infinity(x); composed with x(g) it matches the
    // series route for R_infinity.
    int order = 14;
    RatSeries xg = x_of_g(order);
    RationalFunction R_inf_x = r1_of_x() * r_inf_of_x();
    RatSeries ri = series_compose(RatSeries("g", R_inf_x.expand(order).coeffs()), xg);
    CHECK(ri == r_infinity_series(order));

    CHECK(series_compose(RatSeries("g", g_of_x().expand(order).coeffs()), xg) ==
          RatSeries::identity("g", order));
}

TEST_CASE("classical series equality (closed form vs order-by-order)") {
    int order = 12, kmax = 6;
    SliceSeriesTable cls = solve_classical(kmax, order);
    RatSeries xg = x_of_g(order);
    for (int k = 1; k <= kmax; ++k) {
        RatSeries rk = series_compose(RatSeries("g", Rk(k).expand(order).coeffs()), xg);
        CHECK(rk == cls.R(k));
    }
    RatSeries g1 = series_compose(RatSeries("g", Gk(1).expand(order).coeffs()), xg);
    CHECK(g1.coeff(1) == 1);
    CHECK(g1.coeff(2) == 3);
}

TEST_CASE("special line") {
    SpecialLineReport rep = check_special_line();
    CHECK(rep.tg_residual_zero);
    CHECK(rep.h4_branches_equal);
    CHECK(rep.h4_matches_c_form);
    CHECK(rep.phi_omega_line_values_ok);
    CHECK(rep.big_g_at_c_half == Rational(25, 128));
    CHECK(rep.all());
}

TEST_CASE("phi parametrized by Y") {
    CHECK(t_of_y_matches_quadratic());
    CHECK(phi_quadratic_residual_is_zero());
    CHECK(phi_param_at_t0() == h4_of_c());
    CHECK(phi_param_at_t0().eval<Rational>(0) == 0);
    CHECK(big_g_of_c().eval<Rational>(0) == 0);
}

TEST_CASE("epsilon structure of the closed forms") {
    // g((1-eps)/(1+eps)) = (1 - eps^4)/8 exactly
    RatSeries ge = rf_expand_epsilon(g_of_x(), 8);
    RatSeries expected("eps", 8);
    expected.set_coeff(0, Rational(1, 8));
    expected.set_coeff(4, Rational(-1, 8));
    CHECK(ge == expected);

    for (int k = 1; k <= 8; ++k) {
        RatSeries e = rf_expand_epsilon(Gk(k), 7);
        for (int n = 1; n <= 7; n += 2) CHECK(e.coeff(n) == 0);
        CHECK(e.coeff(2) == 0);
        CHECK(e.coeff(6) > 0);
    }
}
