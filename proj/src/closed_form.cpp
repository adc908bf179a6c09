#include "etri/closed_form.hpp"

#include <stdexcept>

namespace etri::closed_form {

namespace {

RatPoly P(std::vector<long> v) {
    std::vector<Rational> c(v.begin(), v.end());
    return RatPoly(std::move(c));
}

RationalFunction rf(const std::string& var, RatPoly num, RatPoly den) {
    return RationalFunction(var, std::move(num), std::move(den));
}

RatPoly one_minus_pow(int j) {  // 1 - x^j
    std::vector<Rational> c(j + 1, 0);
    c[0] = 1;
    c[j] -= 1;
    return RatPoly(std::move(c));
}

const RatPoly kOnePlusX = P({1, 1});
const RatPoly kOnePlusX2 = P({1, 0, 1});
const RatPoly kCyclo3 = P({1, 1, 1});        // 1+x+x^2
const RatPoly kCyclo5 = P({1, 1, 1, 1, 1});  // 1+x+x^2+x^3+x^4

}  // namespace

RationalFunction g_of_x() { return rf("x", P({0, 1, 0, 1}), kOnePlusX * kOnePlusX * kOnePlusX * kOnePlusX); }

RationalFunction c_of_x() { return rf("x", P({0, 1}), kOnePlusX2); }

RationalFunction r1_of_x() { return rf("x", kCyclo5, kOnePlusX2 * kOnePlusX2); }

RationalFunction big_g_of_x() {
    RatPoly num = P({0, 1}) * kCyclo5 * kCyclo5;
    RatPoly den = kOnePlusX * kOnePlusX * kOnePlusX * kOnePlusX * kOnePlusX2 * kOnePlusX2 * kOnePlusX2;
    return rf("x", num, den);
}

RationalFunction r_inf_of_x() { return rf("x", kOnePlusX * kOnePlusX * kOnePlusX2, kCyclo5); }

RationalFunction alpha_of_x() { return rf("x", -kCyclo3, kOnePlusX2 * kOnePlusX2); }

RationalFunction beta_of_x() { return rf("x", -(P({0, 0, 1}) * kCyclo3), kOnePlusX2 * kOnePlusX2); }

RationalFunction Rk(int k) {
    if (k < 0) throw std::invalid_argument("Rk needs k >= 0");
    if (k == 0) return RationalFunction::constant("x", 0);
    RatPoly num = kOnePlusX * kOnePlusX * one_minus_pow(k) * one_minus_pow(k + 4);
    RatPoly den = kOnePlusX2 * one_minus_pow(k + 1) * one_minus_pow(k + 3);
    return rf("x", num, den);
}

RationalFunction Tk(int k) {
    if (k < 1) throw std::invalid_argument("Tk needs k >= 1");
    if (k == 1) return RationalFunction::constant("x", 0);
    RatPoly num = P({0, 1}) * kCyclo3 * one_minus_pow(k - 1) * one_minus_pow(k + 5);
    RatPoly den = kOnePlusX2 * kOnePlusX2 * one_minus_pow(k + 1) * one_minus_pow(k + 3);
    return rf("x", num, den);
}

RationalFunction Gk(int k) {
    if (k < 1) throw std::invalid_argument("Gk needs k >= 1");
    RationalFunction g = Rk(k) - Rk(k - 1);
    if (k == 1) g = g - RationalFunction::constant("x", 1);
    return g;
}

RationalFunction Yk(int k) {
    if (k < 1) throw std::invalid_argument("Yk needs k >= 1");
    RatPoly num = -(kCyclo3 * one_minus_pow(k + 3));
    RatPoly den = kOnePlusX2 * kOnePlusX2 * one_minus_pow(k + 1);
    return rf("x", num, den);
}

RationalFunction rk_rescaled(int k) {
    if (k < 1) throw std::invalid_argument("rk needs k >= 1");
    RatPoly num = kOnePlusX * kOnePlusX * kOnePlusX2 * one_minus_pow(k) * one_minus_pow(k + 4);
    RatPoly den = kCyclo5 * one_minus_pow(k + 1) * one_minus_pow(k + 3);
    return rf("x", num, den);
}

RationalFunction tk_rescaled(int k) { return rk_rescaled(k) - RationalFunction::constant("x", 1); }

RationalFunction big_g_of_c() {
    RatPoly q = P({-1, -1, 1});  // C^2 - C - 1
    return rf("C", P({0, 1}) * q * q, P({1, 2}) * P({1, 2}));
}

RationalFunction h4_of_c() { return rf("C", P({0, -1, -1, 2, 1}), P({-1, 1}) * P({1, 2}) * P({1, 2})); }

RationalFunction t_line_of_c() { return rf("C", P({0, -1, -1}), P({-1, -1, 1})); }

RatSeries x_of_g(int order) {
    RatSeries s = series_revert(g_of_x().expand(order));
    return RatSeries("g", s.coeffs());
}

RatSeries x_of_big_g(int order) {
    RatSeries s = series_revert(big_g_of_x().expand(order));
    return RatSeries("G", s.coeffs());
}

std::vector<Parametrization> parametrizations() {
    std::vector<Parametrization> out;
    out.push_back({"x-of-g", g_of_x(), Rational(0), Rational(1)});
    out.push_back({"C-of-x", c_of_x(), Rational(0), Rational(1)});
    out.push_back({"G-of-C", big_g_of_c(), Rational(0), Rational(1, 2)});
    return out;
}

HomographicMap yk_recursion_map() {
    RationalFunction C = c_of_x();
    RationalFunction one = RationalFunction::constant("x", 1);
    HomographicMap m;
    m.a = (C + one) * (C + one);
    m.b = C * C * m.a;
    m.c = -one;
    m.d = C * (C + one);
    m.alpha = alpha_of_x();
    m.beta = beta_of_x();
    m.multiplier = (m.c * m.beta + m.d) / (m.c * m.alpha + m.d);
    return m;
}

namespace {

// h4 branch expressions in (t, phi, omega) for a given G, assembled over any
// commutative fraction field.
RationalFunction h4_branch1(const RationalFunction& t, const RationalFunction& phi,
                            const RationalFunction& omega, const RationalFunction& G) {
    RationalFunction one = RationalFunction::constant(t.var(), 1);
    RationalFunction tail = t * omega * ((t + one) * phi - one);
    return (G * (t + one) * phi + tail) / (G + tail);
}

RationalFunction h4_branch2(const RationalFunction& t, const RationalFunction& phi,
                            const RationalFunction& omega, const RationalFunction& G) {
    RationalFunction one = RationalFunction::constant(t.var(), 1);
    RationalFunction tphi = t * phi * ((t + one) * omega - one);
    return (G * (omega * t * t - t - phi) - tphi) / (G * (t + one) * (t * omega - one) - tphi);
}

struct LineValues {
    RationalFunction t, G, phi, omega, one;
};

LineValues line_values() {
    LineValues v;
    v.t = t_line_of_c();
    v.G = big_g_of_c();
    v.one = RationalFunction::constant("C", 1);
    v.phi = v.t / ((v.t + v.one) * (v.t + v.one));
    v.omega = (v.t - v.G * (v.t + v.one) * (v.t + v.one)) / (v.t * (v.t + v.one));
    return v;
}

}  // namespace

RationalFunction h4_branch1_on_line() {
    LineValues v = line_values();
    return h4_branch1(v.t, v.phi, v.omega, v.G);
}

RationalFunction h4_branch2_on_line() {
    LineValues v = line_values();
    return h4_branch2(v.t, v.phi, v.omega, v.G);
}

SpecialLineReport check_special_line() {
    SpecialLineReport rep;
    LineValues v = line_values();
    RationalFunction tp1 = v.t + v.one;
    RationalFunction residual =
        tp1.pow(5) * v.G * v.G - (v.t - v.one) * tp1 * tp1 * v.G - v.t;
    rep.tg_residual_zero = residual.is_zero();

    RationalFunction b1 = h4_branch1_on_line();
    RationalFunction b2 = h4_branch2_on_line();
    rep.h4_branches_equal = (b1 == b2);
    rep.h4_matches_c_form = (b1 == h4_of_c());

    // omega on the line agrees with the elimination value
    // omega = (t(t+1)phi + G(t+1) - t) / (t(t+1)((t+1)phi - 1)).
    RationalFunction omega_elim = (v.t * tp1 * v.phi + v.G * tp1 - v.t) / (v.t * tp1 * (tp1 * v.phi - v.one));
    rep.phi_omega_line_values_ok = (omega_elim == v.omega);

    rep.big_g_at_c_half = big_g_of_c().eval<Rational>(Rational(1, 2));
    return rep;
}

// ---------------------------------------------------------------------------
// Two-variable identities in (C, Y): the quadratic equation defining phi, its
// parametrization by Y, and the factorized recursion. Polynomials in Y with
// polynomial-in-C coefficients; fractions are kept unreduced and compared by
// cross-multiplication, so no bivariate gcd is needed.

namespace {

using Poly2 = Polynomial<RatPoly>;  // variable Y, coefficients in C

struct Frac2 {
    Poly2 num, den;  // den nonzero
    Frac2 operator+(const Frac2& o) const { return {num * o.den + o.num * den, den * o.den}; }
    Frac2 operator-(const Frac2& o) const { return {num * o.den - o.num * den, den * o.den}; }
    Frac2 operator*(const Frac2& o) const { return {num * o.num, den * o.den}; }
    Frac2 operator/(const Frac2& o) const { return {num * o.den, den * o.num}; }
    bool is_zero() const { return num.is_zero(); }
};

Poly2 cpoly(std::vector<long> v) {  // polynomial in C, constant in Y
    std::vector<Rational> c(v.begin(), v.end());
    return Poly2(RatPoly(std::move(c)));
}

Poly2 ypower(int j) { return Poly2::monomial(RatPoly(Rational(1)), j); }

Frac2 f2(Poly2 p) { return {std::move(p), Poly2(RatPoly(Rational(1)))}; }

// t(Y) = -(C+Y+1)(C^3+C^2+Y) / (C(C^2-C-1) Y)
Frac2 t_of_y() {
    Poly2 a = ypower(1) + cpoly({1, 1});        // Y + C + 1
    Poly2 b = ypower(1) + cpoly({0, 0, 1, 1});  // Y + C^2 + C^3
    return {-(a * b), cpoly({0, -1, -1, 1}) * ypower(1)};
}

// phi(Y) = -C(C^2-C-1) Y (C^4+2C^3 + C^2 - Y C^2 + Y C + Y)
//          / ((2C+1)^2 (C^2+Y)(C^3+C^2+Y))
Frac2 phi_of_y() {
    Poly2 lin = ypower(1) * cpoly({1, 1, -1}) + cpoly({0, 0, 1, 2, 1});  // Y(1+C-C^2) + C^2+2C^3+C^4
    Poly2 num = -(cpoly({0, -1, -1, 1}) * ypower(1) * lin);              // -C(C^2-C-1) Y lin
    Poly2 den = cpoly({1, 4, 4}) * (ypower(1) + cpoly({0, 0, 1})) * (ypower(1) + cpoly({0, 0, 1, 1}));
    return {num, den};
}

// coefficients of the quadratic 0 = A0 + A1 phi + A2 phi^2 as polynomials in
// (C, t); assembled with t as a Frac2 argument.
Frac2 quadratic_residual(const Frac2& t, const Frac2& phi) {
    Frac2 one = f2(cpoly({1}));
    Frac2 a0 = f2(cpoly({0, 1}) * cpoly({1, 3, 3, 1})) *
               (f2(cpoly({0, -1, -1, 2, 1})) + f2(cpoly({1, 2, -1, -2, 1})) * t);
    Poly2 c_cm1_cp13 = cpoly({0, -1, 1}) * cpoly({1, 3, 3, 1});  // C(C-1)(C+1)^3
    Frac2 a1_inner = f2(c_cm1_cp13) + f2(cpoly({1, 1}) * cpoly({1, 3, 1, -2, 2})) * t +
                     f2(cpoly({0, 1}) * cpoly({1, 2, -1, -2, 1})) * t * t;
    Frac2 a1 = f2(cpoly({1, 4, 4})) * a1_inner;
    Frac2 a2 = f2(cpoly({1, 8, 24, 32, 16})) * t * (t + one);
    return a0 - a1 * phi + a2 * phi * phi;
}

}  // namespace

bool phi_quadratic_residual_is_zero() {
    Frac2 t = t_of_y();
    Frac2 phi = phi_of_y();
    return quadratic_residual(t, phi).is_zero();
}

bool t_of_y_matches_quadratic() {
    // Substituting t(Y) into 0 = C^2(C+1)^2 + ((C+1)(C^2+1) + C(C^2-C-1)t) Y + Y^2.
    Frac2 t = t_of_y();
    Frac2 y = f2(ypower(1));
    Frac2 res = f2(cpoly({0, 0, 1, 2, 1})) +
                (f2(cpoly({1, 1, 1, 1})) + f2(cpoly({0, -1, -1, 1})) * t) * y + y * y;
    return res.is_zero();
}

namespace {
RationalFunction eval_poly2_at(const Poly2& p, const RationalFunction& y) {
    RationalFunction acc = RationalFunction::constant("C", 0);
    for (int j = p.degree(); j >= 0; --j) {
        acc = acc * y + RationalFunction::from_poly("C", p.coeff(j));
    }
    return acc;
}
}  // namespace

RationalFunction phi_param_at_t0() {
    Frac2 phi = phi_of_y();
    RationalFunction y1 = rf("C", P({-1, -1}), P({1}));  // Y_1 = -(C+1)
    return eval_poly2_at(phi.num, y1) / eval_poly2_at(phi.den, y1);
}

bool factorized_recursion_second_factor_zero(int k) {
    RationalFunction C = c_of_x();
    RationalFunction one = RationalFunction::constant("x", 1);
    RationalFunction ym = Yk(k - 1), y = Yk(k);
    RationalFunction factor2 = C * C * (C + one) * (C + one) + (C + one) * (C + one) * ym -
                               C * (C + one) * y + ym * y;
    return factor2.is_zero();
}

bool factorized_recursion_first_factor_nonzero(int k, const Rational& x_sample) {
    RationalFunction C = c_of_x();
    RationalFunction one = RationalFunction::constant("x", 1);
    RationalFunction ym = Yk(k - 1), y = Yk(k);
    RationalFunction f1 = C * C * C * (C + one) - C * C * ym - C * C * y - ym * y;
    return f1.eval<Rational>(x_sample) != 0;
}

}  // namespace etri::closed_form
