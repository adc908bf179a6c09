#include "etri/hull.hpp"

#include "etri/classical.hpp"
#include "etri/closed_form.hpp"
#include "etri/epsilon.hpp"
#include "etri/kernel.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <stdexcept>

namespace etri::hull {

namespace {
int g_digits = 50;
}

void set_precision(int decimal_digits) {
    if (decimal_digits < 15) throw std::invalid_argument("precision below 15 digits");
    g_digits = decimal_digits;
    Real::default_precision(g_digits);
}
int precision() { return g_digits; }

namespace {

struct PrecisionGuard {
    PrecisionGuard() { Real::default_precision(g_digits); }
};

BivariateSeries lift_g(const RatSeries& s, int cap) {
    return BivariateSeries::from_scalar_series(s, "alpha2", cap);
}

Real to_real(const Rational& q) { return Real(numerator(q)) / Real(denominator(q)); }

}  // namespace

std::vector<RatSeries> kernel_series(int P, int order) {
    PhiOmegaSolution sol = solve_phi_omega(order, std::max(order, P));
    SliceSeriesTable cls = solve_classical(1, order);
    return kernel_coefficients(sol.phi, cls.R(1), P).coefficients;
}

RatSeries kernel_on_series(const std::vector<RatSeries>& kp, const RatSeries& x) {
    if (x.coeff(0) != 0) throw std::domain_error("kernel argument needs zero constant term");
    int n = x.order();
    RatSeries acc = kp.back().truncated(n);
    for (int p = static_cast<int>(kp.size()) - 2; p >= 0; --p) acc = acc * x + kp[p].truncated(n);
    return acc;
}

BivariateSeries kernel_on_series(const std::vector<RatSeries>& kp, const BivariateSeries& x) {
    if (!x.coeff(0).is_zero()) throw std::domain_error("kernel argument needs zero constant term");
    int cap = x.aux_cap();
    BivariateSeries acc = lift_g(kp.back(), cap).truncated(x.main_order(), cap);
    for (int p = static_cast<int>(kp.size()) - 2; p >= 0; --p) acc = acc * x + lift_g(kp[p], cap);
    return acc;
}

BivariateSeries H_series_iterated(int k, int d, int order) {
    if (d == 1) {
        return lift_g(two_point_series(k, order), order);
    }
    if (d < 1 || d > k - 1) throw std::invalid_argument("H_series_iterated needs 1 <= d <= k-1");
    std::vector<RatSeries> kp = kernel_series(order, order);
    SliceSeriesTable cls = solve_classical(d, order);
    BivariateSeries x1 = lift_g(cls.R(d) - cls.R(1), order).mul_aux();
    BivariateSeries x2 = lift_g(cls.R(d - 1) - cls.R(1), order).mul_aux();
    for (int m = 0; m < k - d; ++m) {
        x1 = kernel_on_series(kp, x1);
        x2 = kernel_on_series(kp, x2);
    }
    return x1 - x2;
}

namespace {

// nu_j = lambda(alpha, j) x^{j-1} as a power series in x over Z[alpha^2]:
// the regular root of x^6(1-A) nu^2 - (1 + x^6 - A(x^2+x^4)) nu + (1-A) = 0
// with A = alpha^2 rho_j(x), anchored at nu(0) = 1 - alpha^2.
BivariateSeries nu_series(int j, int order, int cap) {
    BivariateSeries one("x", "alpha2", order, cap);
    one.set_coeff(0, RatPoly(Rational(1)));
    if (j == 1) return one;

    auto one_minus_pow = [&](int e) {
        std::vector<Rational> c(e + 1, 0);
        c[0] = 1;
        c[e] -= 1;
        return RatPoly(std::move(c));
    };
    RationalFunction rho("x", one_minus_pow(j - 1) * one_minus_pow(j + 5),
                         one_minus_pow(j + 1) * one_minus_pow(j + 3));
    BivariateSeries A = BivariateSeries::from_scalar_series(rho.expand(order), "alpha2", cap).mul_aux();

    auto xpow = [&](int e) {
        RatSeries s("x", order);
        if (e <= order) s.set_coeff(e, 1);
        return BivariateSeries::from_scalar_series(s, "alpha2", cap);
    };
    BivariateSeries x2 = xpow(2), x4 = xpow(4), x6 = xpow(6);
    BivariateSeries denom = one + x6 - A * (x2 + x4);
    BivariateSeries num_base = one - A;

    BivariateSeries nu("x", "alpha2", order, cap);
    for (int sweep = 0; sweep <= order / 6 + 2; ++sweep) {
        BivariateSeries next = (num_base * (one + x6 * nu * nu)) / denom;
        if (next == nu) break;
        nu = next;
    }
    return nu;
}

BivariateSeries deformed_term(const BivariateSeries& nu, int m, int order, int cap) {
    BivariateSeries one("x", "alpha2", order, cap);
    one.set_coeff(0, RatPoly(Rational(1)));
    auto xpow = [&](int e) {
        RatSeries s("x", order);
        if (e <= order) s.set_coeff(e, 1);
        return BivariateSeries::from_scalar_series(s, "alpha2", cap);
    };
    RationalFunction pref("x", RatPoly(std::vector<Rational>{0, 1, 1, 1}),
                          RatPoly(std::vector<Rational>{1, 0, 2, 0, 1}));
    BivariateSeries prefb = BivariateSeries::from_scalar_series(pref.expand(order), "alpha2", cap);
    BivariateSeries num = (one - nu * xpow(m)) * (one - nu * xpow(m + 6));
    BivariateSeries den = (one - nu * xpow(m + 2)) * (one - nu * xpow(m + 4));
    return prefb * (num / den);
}

}  // namespace

BivariateSeries H_series_closed(int k, int d, int order) {
    if (d == 1) return lift_g(two_point_series(k, order), order);
    if (d < 1 || d > k - 1) throw std::invalid_argument("H_series_closed needs 1 <= d <= k-1");
    int m = k - d;
    BivariateSeries nu_d = nu_series(d, order, order);
    BivariateSeries nu_prev = nu_series(d - 1, order, order);
    BivariateSeries hx = deformed_term(nu_d, m, order, order) - deformed_term(nu_prev, m, order, order);
    return hx.main_composed(closed_form::x_of_g(order));
}

RatSeries deformed_t_series(int level, const Rational& lambda, int order) {
    auto omp = [&](int e) {  // 1 - lambda x^e
        RatSeries s = RatSeries::constant("x", 1, order);
        if (e == 0) {
            s.set_coeff(0, 1 - lambda);
        } else if (e <= order) {
            s.set_coeff(e, -lambda);
        }
        return s;
    };
    RationalFunction pref("x", RatPoly(std::vector<Rational>{0, 1, 1, 1}),
                          RatPoly(std::vector<Rational>{1, 0, 2, 0, 1}));
    RatSeries tx = pref.expand(order) * omp(level - 1) * omp(level + 5) / (omp(level + 1) * omp(level + 3));
    return series_compose(RatSeries("g", tx.coeffs()), closed_form::x_of_g(order));
}

// ---------------------------------------------------------------------------
// Numeric lambda and H.

LambdaSolution lambda_of(const Real& alpha, int d, const Real& x) {
    PrecisionGuard guard;
    if (d < 1) throw std::invalid_argument("lambda_of needs d >= 1");
    if (!(x > 0 && x < 1)) throw std::invalid_argument("lambda_of needs 0 < x < 1");
    LambdaSolution out;
    out.alpha = alpha;
    out.d = d;
    out.x = x;
    if (d == 1) {  // L(1) = 0 convention: no deformation
        out.lambda = 1;
        out.companion_root = pow(x, -2 * d - 4);
        out.residual = 0;
        return out;
    }
    Real a = pow(x, d - 1), b = pow(x, d + 5), c = pow(x, d + 1), e = pow(x, d + 3);
    Real rho = ((1 - a) * (1 - b)) / ((1 - c) * (1 - e));
    Real lam = 1;
    int steps = 256;
    Real target = alpha * alpha;
    for (int i = 1; i <= steps; ++i) {
        Real a2 = 1 + (target - 1) * i / steps;
        Real A = a2 * rho;
        Real q = a * b * (1 - A), s = a + b - A * (c + e), w = 1 - A;
        Real disc = s * s - 4 * q * w;
        if (disc < 0) throw std::domain_error("lambda branch left the real line (negative discriminant)");
        Real r1 = (s + sqrt(disc)) / (2 * q), r2 = (s - sqrt(disc)) / (2 * q);
        lam = abs(r1 - lam) < abs(r2 - lam) ? r1 : r2;
    }
    Real A = target * rho;
    Real q = a * b * (1 - A), s = a + b - A * (c + e);
    out.lambda = lam;
    out.companion_root = s / q - lam;  // root sum
    out.residual = q * lam * lam - s * lam + (1 - A);
    return out;
}

namespace {

Real deformed_value(const Real& lam, int level, const Real& x) {
    auto f = [&](int j) -> Real { return 1 - lam * pow(x, j); };
    Real pref = x * (1 + x + x * x) / pow(1 + x * x, 2);
    return pref * f(level - 1) * f(level + 5) / (f(level + 1) * f(level + 3));
}

}  // namespace

Real H_closed(int k, int d, const Real& alpha, const Real& x) {
    PrecisionGuard guard;
    if (d < 1 || d > k - 1) throw std::invalid_argument("H_closed needs 1 <= d <= k-1");
    LambdaSolution ld = lambda_of(alpha, d, x);
    LambdaSolution lp = lambda_of(alpha, d - 1 == 0 ? 1 : d - 1, x);
    return deformed_value(ld.lambda, k, x) - deformed_value(lp.lambda, k - 1, x);
}

Real H_closed_combined(int k, int d, const Real& alpha, const Real& x) {
    PrecisionGuard guard;
    if (d < 2 || d > k - 1) throw std::invalid_argument("H_closed_combined needs 2 <= d <= k-1");
    Real lam = lambda_of(alpha, d, x).lambda;
    Real lp = lambda_of(alpha, d - 1, x).lambda;
    Real x2 = x * x;
    Real front = pow(1 - x2, 2) * (1 + x + x2) / (1 + x2);
    Real num = pow(x, k - 1) * (lp - x * lam) * (1 - lam * lp * pow(x, 2 * k + 3));
    Real den = (1 - lam * pow(x, k + 1)) * (1 - lam * pow(x, k + 3)) * (1 - lp * pow(x, k)) *
               (1 - lp * pow(x, k + 2));
    return front * num / den;
}

// ---------------------------------------------------------------------------
// Epsilon structure.

EpsilonStructure singular_coeff(const RationalFunction& f) {
    RatSeries e = rf_expand_epsilon(f, 6);
    for (int n = 1; n <= 5; n += 2)
        if (e.coeff(n) != 0) throw std::logic_error("odd epsilon coefficient present");
    if (e.coeff(2) != 0) throw std::logic_error("epsilon^2 coefficient present");
    return {e.coeff(0), e.coeff(4), e.coeff(6)};
}

namespace {

// dense jets in eps over Real
struct Jet {
    std::vector<Real> c;
    explicit Jet(int len) : c(len, Real(0)) {}
    int len() const { return static_cast<int>(c.size()); }
};

Jet jconst(const Real& v, int len) {
    Jet j(len);
    j.c[0] = v;
    return j;
}

Jet operator+(const Jet& a, const Jet& b) {
    Jet r(a.len());
    for (int i = 0; i < a.len(); ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
}
Jet operator-(const Jet& a, const Jet& b) {
    Jet r(a.len());
    for (int i = 0; i < a.len(); ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
}
Jet operator*(const Jet& a, const Jet& b) {
    Jet r(a.len());
    for (int i = 0; i < a.len(); ++i)
        for (int j = 0; i + j < a.len(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    return r;
}
Jet operator/(const Jet& a, const Jet& b) {
    Jet r(a.len());
    for (int i = 0; i < a.len(); ++i) {
        Real acc = a.c[i];
        for (int j = 1; j <= i; ++j) acc -= b.c[j] * r.c[i - j];
        r.c[i] = acc / b.c[0];
    }
    return r;
}
Jet jpow(const Jet& a, int e) {
    Jet r = jconst(1, a.len());
    Jet x = a;
    for (int n = e; n > 0; n >>= 1) {
        if (n & 1) r = r * x;
        if (n > 1) x = x * x;
    }
    return r;
}
Jet jsqrt(const Jet& a) {
    Jet r(a.len());
    r.c[0] = sqrt(a.c[0]);
    for (int n = 1; n < a.len(); ++n) {
        Real acc = a.c[n];
        for (int j = 1; j < n; ++j) acc -= r.c[j] * r.c[n - j];
        r.c[n] = acc / (2 * r.c[0]);
    }
    return r;
}
// divide by eps^m, checking the low coefficients are numerically zero
Jet jshift_down(const Jet& a, int m) {
    Real scale = 0;
    for (const Real& v : a.c) scale = std::max(scale, Real(abs(v)));
    Real tol = scale * pow(Real(10), -(g_digits * 2) / 3);
    Jet r(a.len());
    for (int i = 0; i < m; ++i)
        if (abs(a.c[i]) > tol) throw std::logic_error("jet not divisible by eps^m");
    for (int i = m; i < a.len(); ++i) r.c[i - m] = a.c[i];
    return r;
}
Real jeval(const Jet& a, const Real& t) {
    Real acc = 0;
    for (int i = a.len() - 1; i >= 0; --i) acc = acc * t + a.c[i];
    return acc;
}

Jet x_jet(int len) {
    Jet num = jconst(1, len), den = jconst(1, len);
    if (len > 1) {
        num.c[1] = -1;
        den.c[1] = 1;
    }
    return num / den;
}

Jet geom_jet(const Jet& x, int j) {  // (1 - x^j)/(1 - x) = 1 + x + ... + x^{j-1}
    Jet acc = jconst(0, x.len());
    Jet p = jconst(1, x.len());
    for (int i = 0; i < j; ++i) {
        acc = acc + p;
        p = p * x;
    }
    return acc;
}

// lambda(alpha, d) as a jet around eps = 0; branch fixed by continuity with
// the homotopy value at a small eps
Jet lambda_jet(const Real& alpha, int d, int len) {
    if (d == 1 || alpha == 1) return jconst(1, len);
    Jet x = x_jet(len);
    Jet a = jpow(x, d - 1), b = jpow(x, d + 5), c = jpow(x, d + 1), e = jpow(x, d + 3);
    Jet rho = (geom_jet(x, d - 1) * geom_jet(x, d + 5)) / (geom_jet(x, d + 1) * geom_jet(x, d + 3));
    Jet A = jconst(alpha * alpha, len) * rho;
    Jet one = jconst(1, len);
    Jet q = a * b * (one - A);
    Jet s = a + b - A * (c + e);
    Jet w = one - A;
    Jet disc = s * s - jconst(4, len) * q * w;  // vanishes to order eps^2
    Jet root = jshift_down(disc, 2);
    if (root.c[0] <= 0) throw std::logic_error("lambda jet: nonpositive shifted discriminant");
    Jet sq(len);  // eps * sqrt(root)
    {
        Jet sr = jsqrt(root);
        for (int i = len - 1; i >= 1; --i) sq.c[i] = sr.c[i - 1];
    }
    Jet lam_plus = (s + sq) / (jconst(2, len) * q);
    Jet lam_minus = (s - sq) / (jconst(2, len) * q);

    Real eps0 = Real(1) / 64;
    Real xnum = (1 - eps0) / (1 + eps0);
    Real anchor = lambda_of(alpha, d, xnum).lambda;
    Real dp = abs(jeval(lam_plus, eps0) - anchor);
    Real dm = abs(jeval(lam_minus, eps0) - anchor);
    return dp < dm ? lam_plus : lam_minus;
}

// (1 - lam x^j) has a simple zero at eps = 0; the deformed slice value is a
// ratio of four such factors
Jet deformed_jet(const Jet& lam, int level, int len) {
    Jet x = x_jet(len);
    Jet one = jconst(1, len);
    auto factor = [&](int j) { return jshift_down(one - lam * jpow(x, j), 1); };
    Jet pref = x * (one + x + x * x) / jpow(one + x * x, 2);
    return pref * (factor(level - 1) * factor(level + 5)) / (factor(level + 1) * factor(level + 3));
}

}  // namespace

std::vector<Real> H_epsilon_jet(int k, int d, const Real& alpha, int len) {
    PrecisionGuard guard;
    if (d < 2 || d > k - 1) throw std::invalid_argument("H_epsilon_jet needs 2 <= d <= k-1");
    Jet lam = lambda_jet(alpha, d, len);
    Jet lp = lambda_jet(alpha, d - 1, len);
    Jet h = deformed_jet(lam, k, len) - deformed_jet(lp, k - 1, len);
    return h.c;
}

Real E_k_alpha(int k, int d, const Real& alpha) {
    PrecisionGuard guard;
    std::vector<Real> h = H_epsilon_jet(k, d, alpha, 8);
    Real scale = 0;
    for (const Real& v : h) scale = std::max(scale, Real(abs(v)));
    Real tol = scale * pow(Real(10), -(g_digits * 2) / 3);
    for (int n : {1, 2, 3, 5}) {
        if (abs(h[n]) > tol) throw std::logic_error("H epsilon expansion has a forbidden coefficient");
    }
    EpsilonStructure g = singular_coeff(closed_form::Gk(k));
    return h[6] / to_real(g.c6);
}

// ---------------------------------------------------------------------------
// Statistics.

Real E_inf_alpha(const Real& alpha, int d) {
    PrecisionGuard guard;
    if (d < 2) throw std::invalid_argument("E_inf_alpha needs d >= 2");
    Real a2 = alpha * alpha;
    auto piece = [&](Real m) -> Real {
        Real num = m * (9 - a2) + 8 * a2;
        Real den = m * (1 - a2) + 8 * a2;
        if (num < 0 || den <= 0) throw std::domain_error("negative radicand");
        return sqrt(num / den);
    };
    return piece(Real(d + 1) * (d + 3)) - piece(Real(d) * (d + 2));
}

Rational E_inf_mean(int d) {
    if (d < 2) throw std::invalid_argument("E_inf_mean needs d >= 2");
    Rational dd(d);
    Rational num = 3 * (rat_pow(dd, 4) + 6 * rat_pow(dd, 3) + 10 * dd * dd + 3 * dd - 5);
    return num / (8 * (dd + 1) * (dd + 2));
}

Integer binomial_a(int p) {
    Integer acc = 0;
    for (int q = 0; q <= p - 1; ++q) acc += int_pow(2, q) * binomial(p - 1, q) * binomial(2 * q + 1, q);
    return acc;
}

Rational p_inf(int d, int p) {
    if (d < 2 || p < 1) throw std::invalid_argument("p_inf needs d >= 2, p >= 1");
    Rational first = rat_pow(Rational(Integer(d - 1) * (d + 5), Integer(d + 1) * (d + 3)), p);
    Rational second = rat_pow(Rational(Integer(d - 2) * (d + 4), Integer(d) * (d + 2)), p);
    return Rational(4) * Rational(3) / rat_pow(Rational(9), p) * (first - second) * binomial_a(p);
}

ProbabilityTotal p_inf_total(int d, double term_floor) {
    PrecisionGuard guard;
    ProbabilityTotal out;
    out.total = 0;
    Real prev = 0;
    Real term = 0;
    for (int p = 1;; ++p) {
        prev = term;
        Rational t = p_inf(d, p);
        term = to_real(t);
        out.total += term;
        out.terms = p;
        if (p > 3 && term < Real(term_floor)) break;
        if (p > 100000) throw std::logic_error("p_inf tail did not decay");
    }
    Real ratio = prev > 0 ? term / prev : Real(0.9);
    if (ratio >= 1) ratio = Real(99) / 100;
    out.tail_bound = term * ratio / (1 - ratio);
    return out;
}

RationalFunction E_k_mean_in_k(int d) {
    if (d < 2) throw std::invalid_argument("E_k_mean_in_k needs d >= 2");
    auto C = [](const Rational& q) { return RationalFunction::constant("k", q); };
    RationalFunction K = RationalFunction::identity("k");
    Rational dd(d);

    RationalFunction front =
        K * (K + C(1)) * (K + C(2)) * (K + C(3)) /
        ((C(2) * K + C(3)) *
         (C(10) * K.pow(6) + C(90) * K.pow(5) + C(283) * K.pow(4) + C(348) * K.pow(3) +
          C(103) * K.pow(2) - C(42) * K - C(36)) *
         C(2));

    Rational dprod_a = (dd - 1) * (dd + 1) * (dd + 3) * (dd + 5);
    RationalFunction term_a =
        C(dprod_a) * (K + C(2)) *
        ((K + C(1)).pow(2) * (K + C(3)).pow(2) * (C(5) * K * K + C(20) * K + C(4)) -
         C(dprod_a * (5 * dd * dd + 20 * dd + 24) + 18)) /
        (C(dd + 2) * (K + C(1)).pow(2) * (K + C(3)).pow(2));

    Rational dprod_b = (dd - 2) * dd * (dd + 2) * (dd + 4);
    RationalFunction term_b =
        C(dprod_b) * (K + C(1)) *
        (K.pow(2) * (K + C(2)).pow(2) * (C(5) * K * K + C(10) * K - C(11)) -
         C(dprod_b * (5 * dd * dd + 10 * dd + 9) + 18)) /
        (C(dd + 1) * K.pow(2) * (K + C(2)).pow(2));

    return front * (term_a - term_b);
}

Rational E_k_mean(int k, int d) {
    if (d < 2 || d > k - 1) throw std::invalid_argument("E_k_mean needs 2 <= d <= k-1");
    return E_k_mean_in_k(d).eval<Rational>(Rational(k));
}

Rational E_k_mean_limit(int d) {
    RationalFunction f = E_k_mean_in_k(d);
    if (f.num().degree() != f.den().degree())
        throw std::logic_error("finite-k mean does not tend to a finite limit");
    return f.num().leading() / f.den().leading();
}

Real laplace_limit(const Real& tau) {
    PrecisionGuard guard;
    return pow(1 + tau / 4, Real(-3) / 2);
}

Real density_limit(const Real& L) {
    PrecisionGuard guard;
    using boost::math::constants::pi;
    // c = 1/4, c^{3/2} = 1/8
    return 16 * sqrt(L) * exp(-4 * L) / sqrt(pi<Real>());
}

Real u_limit(const Real& u) {
    PrecisionGuard guard;
    return Real(3) / 8 * (1 + u - 3 * pow(u, 6) + pow(u, 7));
}

Real E_inf_laplace(int d, const Real& tau) {
    PrecisionGuard guard;
    Real alpha = exp(-tau / (Real(d) * d));
    return E_inf_alpha(alpha, d);
}

DensityQuadrature density_quadrature() {
    PrecisionGuard guard;
    using boost::math::constants::pi;
    // substitute L = s^2: integral = (32/sqrt(pi)) int s^2 e^{-4 s^2} ds,
    // mean = (32/sqrt(pi)) int s^4 e^{-4 s^2} ds over [0, infinity)
    auto f2 = [](const Real& s) -> Real { return s * s * exp(-4 * s * s); };
    auto f4 = [](const Real& s) -> Real { return s * s * s * s * exp(-4 * s * s); };
    int n = 1 << 15;
    Real S = 8;
    Real h = S / n;
    Real acc2 = f2(Real(0)) + f2(S), acc4 = f4(Real(0)) + f4(S);
    for (int i = 1; i < n; ++i) {
        Real s = h * i;
        int weight = i % 2 ? 4 : 2;
        acc2 += weight * f2(s);
        acc4 += weight * f4(s);
    }
    Real front = h / 3 * 32 / sqrt(pi<Real>());
    return {front * acc2, front * acc4};
}

}  // namespace etri::hull
