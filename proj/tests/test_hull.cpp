#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "etri/classical.hpp"
#include "etri/closed_form.hpp"
#include "etri/hull.hpp"
#include "etri/oracle.hpp"

using namespace etri;
using hull::Real;

namespace {

RatSeries aux_at_one(const BivariateSeries& b) {
    RatSeries s(b.main_var(), b.main_order());
    for (int n = 0; n <= b.main_order(); ++n) {
        Rational acc = 0;
        for (int i = 0; i <= b.coeff(n).degree(); ++i) acc += b.coeff(n).coeff(i);
        s.set_coeff(n, acc);
    }
    return s;
}

Real rat_to_real(const Rational& q) { return Real(numerator(q)) / Real(denominator(q)); }

}  // namespace

TEST_CASE("H specializes to G_k at alpha = 1") {
    for (auto [k, d] : std::vector<std::pair<int, int>>{{3, 2}, {4, 2}, {4, 3}, {5, 3}, {6, 4}}) {
        BivariateSeries h = hull::H_series_iterated(k, d, 8);
        CHECK(aux_at_one(h) == two_point_series(k, 8));
        // nonnegative integer coefficients (they count maps by perimeter)
        for (int n = 0; n <= h.main_order(); ++n)
            for (int i = 0; i <= h.coeff(n).degree(); ++i) {
                CHECK(h.coeff(n).coeff(i) >= 0);
                CHECK(is_integer(h.coeff(n).coeff(i)));
            }
    }
    // d = 1 convention: no alpha dependence at all
    BivariateSeries h1 = hull::H_series_iterated(4, 1, 6);
    for (int n = 0; n <= 6; ++n) CHECK(h1.coeff(n).degree() <= 0);
    CHECK(aux_at_one(h1) == two_point_series(4, 6));
}

TEST_CASE("route equivalence: iterated kernel vs lambda closed form") {
    for (auto [k, d] : std::vector<std::pair<int, int>>{{3, 2}, {4, 2}, {4, 3}, {5, 3}}) {
        BivariateSeries a = hull::H_series_iterated(k, d, 8);
        BivariateSeries b = hull::H_series_closed(k, d, 8);
        CHECK(a == b);
    }
}

TEST_CASE("hull counts from the map oracle match the series") {
    BivariateSeries h = hull::H_series_iterated(3, 2, 3);
    for (int F = 1; F <= 3; ++F) {
        std::map<int, long long> hist = count_hull(F, 3, 2);
        const RatPoly& poly = h.coeff(F);
        long long from_series = 0;
        for (int p = 0; p <= poly.degree(); ++p) {
            long long c = static_cast<long long>(numerator(poly.coeff(p)));
            if (c != 0) from_series += c;
            long long counted = hist.count(p) ? hist.at(p) : 0;
            CHECK(counted == c);
        }
        long long total = 0;
        for (const auto& [p, n] : hist) {
            total += n;
            CHECK(p >= 1);  // perimeter 2p >= 2
        }
        CHECK(total == from_series);
    }
}

TEST_CASE("generalized lambda identity for the kernel, series level") {
    int order = 8;
    std::vector<RatSeries> kp = hull::kernel_series(order, order);
    for (Rational lambda : {Rational(1), Rational(1, 2), Rational(-1, 2)}) {
        for (auto [k, d] : std::vector<std::pair<int, int>>{{4, 2}, {5, 3}}) {
            RatSeries t = hull::deformed_t_series(d, lambda, order);
            for (int m = 0; m < k - d; ++m) t = hull::kernel_on_series(kp, t);
            CHECK(t == hull::deformed_t_series(k, lambda, order));
        }
    }
}

TEST_CASE("generalized lambda identity, numeric kernel from the Y parametrization") {
    hull::set_precision(50);
    Real x = Real(1) / 4;
    Real C = x / (1 + x * x);
    Real R1 = (1 + x + x * x + x * x * x + x * x * x * x) / pow(1 + x * x, 2);
    auto phi_of_t = [&](const Real& t) -> Real {
        Real lin = (C + 1) * (C * C + 1) + C * (C * C - C - 1) * t;
        Real Y = -(lin + sqrt(lin * lin - 4 * C * C * (C + 1) * (C + 1))) / 2;
        Real num = -C * (C * C - C - 1) * Y *
                   (pow(C, 4) + 2 * pow(C, 3) - Y * C * C + C * C + Y * C + Y);
        Real den = pow(2 * C + 1, 2) * (C * C + Y) * (C * C * C + C * C + Y);
        return num / den;
    };
    auto kernel_num = [&](const Real& T) -> Real {
        Real t = T / R1;
        Real u = (t + 1) * phi_of_t(t);
        return R1 * u / (1 - u);
    };
    auto deformed = [&](int level, const Real& lam) -> Real {
        auto f = [&](int j) -> Real { return 1 - lam * pow(x, j); };
        Real pref = x * (1 + x + x * x) / pow(1 + x * x, 2);
        return pref * f(level - 1) * f(level + 5) / (f(level + 1) * f(level + 3));
    };
    for (Real lam : std::vector<Real>{Real(1) / 2, Real(9) / 10, Real(1)}) {
        Real t = deformed(3, lam);
        for (int m = 0; m < 3; ++m) t = kernel_num(t);
        Real expect = deformed(6, lam);
        CHECK(abs(t - expect) < pow(Real(10), -35));
    }
}

TEST_CASE("lambda branch and invariants") {
    hull::set_precision(50);
    Real x = Real(2) / 5;
    hull::LambdaSolution l1 = hull::lambda_of(Real(1), 7, x);
    CHECK(abs(l1.lambda - 1) < pow(Real(10), -40));

    for (auto [alpha, d] : std::vector<std::pair<double, int>>{{0.5, 2}, {0.25, 3}, {0.75, 5}}) {
        hull::LambdaSolution l = hull::lambda_of(Real(alpha), d, x);
        Real product = l.lambda * l.companion_root * pow(x, 2 * d + 4);
        CHECK(abs(product - 1) < pow(Real(10), -30));
        CHECK(abs(l.residual) < pow(Real(10), -35));
        hull::LambdaSolution lneg = hull::lambda_of(Real(-alpha), d, x);
        CHECK(abs(lneg.lambda - l.lambda) < pow(Real(10), -40));
    }
}

TEST_CASE("H closed form numerics") {
    hull::set_precision(50);
    Real x = Real(1) / 10;
    for (auto [k, d] : std::vector<std::pair<int, int>>{{4, 2}, {5, 3}}) {
        // alpha = 1 gives G_k exactly
        Real h1 = hull::H_closed(k, d, Real(1), x);
        Real gk = rat_to_real(closed_form::Gk(k).eval<Rational>(Rational(1, 10)));
        CHECK(abs(h1 - gk) < pow(Real(10), -40));
        // alpha = 0 kills every map with a dividing line
        CHECK(abs(hull::H_closed(k, d, Real(0), x)) < pow(Real(10), -40));
        // the combined display agrees with the difference form
        for (double a : {0.3, 0.8}) {
            Real va = hull::H_closed(k, d, Real(a), x);
            Real vb = hull::H_closed_combined(k, d, Real(a), x);
            CHECK(abs(va - vb) < pow(Real(10), -40));
        }
    }

    // series partial sums converge to the closed value
    Rational gr = closed_form::g_of_x().eval<Rational>(Rational(1, 10));
    for (Rational alpha : {Rational(1, 2), Rational(1, 3)}) {
        BivariateSeries h = hull::H_series_iterated(5, 3, 12);
        auto partial = [&](int order) {
            Rational acc = 0, gp = 1;
            for (int n = 0; n <= order; ++n) {
                acc += h.coeff(n).eval<Rational>(alpha * alpha) * gp;
                gp *= gr;
            }
            return acc;
        };
        Real closed = hull::H_closed(5, 3, rat_to_real(alpha), Real(1) / 10);
        Real err8 = abs(closed - rat_to_real(partial(8)));
        Real err12 = abs(closed - rat_to_real(partial(12)));
        CHECK(err12 < err8 / 100);
        CHECK(err12 < pow(Real(10), -9));
    }
}

TEST_CASE("epsilon structure") {
    hull::EpsilonStructure g = hull::singular_coeff(closed_form::g_of_x());
    CHECK(g.c0 == Rational(1, 8));
    CHECK(g.c4 == Rational(-1, 8));
    CHECK(g.c6 == 0);

    for (int k = 1; k <= 10; ++k) {
        hull::EpsilonStructure s = hull::singular_coeff(closed_form::Gk(k));
        CHECK(s.c6 > 0);
    }

    hull::set_precision(50);
    // H at alpha = 1 has the G_k singular coefficient: the ratio is 1
    for (auto [k, d] : std::vector<std::pair<int, int>>{{4, 2}, {5, 3}, {7, 4}}) {
        Real r = hull::E_k_alpha(k, d, Real(1));
        CHECK(abs(r - 1) < pow(Real(10), -30));
    }
}

TEST_CASE("E_inf formulas") {
    hull::set_precision(50);
    for (int d : {2, 3, 7, 11}) {
        CHECK(abs(hull::E_inf_alpha(Real(1), d) - 1) < pow(Real(10), -40));
        CHECK(abs(hull::E_inf_alpha(Real(0), d)) < pow(Real(10), -40));
    }
    // d = 2: the second radical is exactly 3
    Real a = Real(1) / 2;
    Real expected = sqrt((135 - 7 * a * a) / (15 - 7 * a * a)) - 3;
    CHECK(abs(hull::E_inf_alpha(a, 2) - expected) < pow(Real(10), -40));

    CHECK(hull::E_inf_mean(2) == Rational(105, 32));

    // finite difference of E_inf_alpha at alpha = 1
    for (int d : {2, 3, 5}) {
        Real h = pow(Real(10), -10);
        Real fd = (hull::E_inf_alpha(1 + h, d) - hull::E_inf_alpha(1 - h, d)) / (2 * h);
        CHECK(abs(fd - rat_to_real(hull::E_inf_mean(d))) < pow(Real(10), -8));
    }

    // large-d scaling: E_inf(L(d))/d^2 -> 3c/2 = 3/8
    Rational ratio = hull::E_inf_mean(10000) / Rational(Integer(10000) * 10000);
    Rational diff = ratio - Rational(3, 8);
    if (diff < 0) diff = -diff;
    CHECK(diff < Rational(1, 1000));
}

TEST_CASE("p_inf distribution") {
    CHECK(hull::binomial_a(1) == 1);
    CHECK(hull::binomial_a(2) == 7);
    CHECK(hull::p_inf(2, 1) == Rational(28, 45));

    hull::set_precision(50);
    for (int d : {2, 5, 10, 20}) {
        hull::ProbabilityTotal t = hull::p_inf_total(d);
        CHECK(abs(t.total - 1) < pow(Real(10), -9));
        CHECK(t.tail_bound < pow(Real(10), -9));
        for (int p = 1; p <= 5; ++p) CHECK(hull::p_inf(d, p) >= 0);
    }
}

TEST_CASE("finite-k mean") {
    // d = 2 kills the second bracket: the formula is exact at small k too
    CHECK(hull::E_k_mean_limit(2) == Rational(105, 32));
    for (int d = 2; d <= 8; ++d) CHECK(hull::E_k_mean_limit(d) == hull::E_inf_mean(d));

    // approach to the limit from below at d = 2
    Rational prev = 0;
    for (int k : {3, 5, 9, 17, 33}) {
        Rational v = hull::E_k_mean(k, 2);
        CHECK(v > prev);
        CHECK(v < Rational(105, 32));
        prev = v;
    }

    // alpha-derivative route at alpha = 1 vs the exact formula
    hull::set_precision(50);
    for (auto [k, d] : std::vector<std::pair<int, int>>{{5, 2}, {6, 3}, {8, 4}}) {
        Real h = pow(Real(10), -8);
        Real fd = (hull::E_k_alpha(k, d, 1 + h) - hull::E_k_alpha(k, d, 1 - h)) / (2 * h);
        CHECK(abs(fd - rat_to_real(hull::E_k_mean(k, d))) < pow(Real(10), -6));
    }

    // scaling limit at u = 1/2
    Rational big = hull::E_k_mean(2000, 1000) / Rational(1000000);
    Real target = hull::u_limit(Real(1) / 2);
    CHECK(abs(rat_to_real(big) - target) < Real(1) / 100 * target);
}

TEST_CASE("limit laws") {
    hull::set_precision(50);
    CHECK(abs(hull::laplace_limit(Real(0)) - 1) < pow(Real(10), -45));
    CHECK(abs(hull::u_limit(Real(1))) < pow(Real(10), -45));  // 1+1-3+1 = 0

    for (Real tau : std::vector<Real>{Real(1) / 2, Real(1), Real(2)}) {
        Real prev_err = 1;
        for (int d : {50, 100, 200}) {
            Real err = abs(hull::E_inf_laplace(d, tau) - hull::laplace_limit(tau));
            CHECK(err < prev_err);
            prev_err = err;
        }
        CHECK(prev_err < Real(2) / 100);
    }

    hull::DensityQuadrature q = hull::density_quadrature();
    CHECK(abs(q.integral - 1) < pow(Real(10), -9));
    CHECK(abs(q.mean - Real(3) / 8) < pow(Real(10), -9));
}
