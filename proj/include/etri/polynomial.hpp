#pragma once

#include "etri/rational.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace etri {

template <class R>
class Polynomial;

// Minimal ring interface used by the generic series/polynomial code.
template <class R>
struct RingOps {
    static R zero() { return R(0); }
    static R one() { return R(1); }
    static bool is_zero(const R& a) { return a == R(0); }
    static bool is_unit(const R& a) { return a != R(0); }
    static R inverse(const R& a) { return R(1) / a; }
};

// Dense univariate polynomial over a commutative ring R, index = exponent.
// Invariant: no trailing zero coefficients (the zero polynomial is empty).
template <class R>
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(const R& c) {
        if (!RingOps<R>::is_zero(c)) c_ = {c};
    }
    explicit Polynomial(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial monomial(const R& c, int degree) {
        if (RingOps<R>::is_zero(c)) return {};
        Polynomial p;
        p.c_.assign(degree + 1, RingOps<R>::zero());
        p.c_[degree] = c;
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero

    const R& coeff(int i) const {
        static const R kZero = RingOps<R>::zero();
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : kZero;
    }
    const std::vector<R>& coeffs() const { return c_; }

    const R& leading() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<R> r(std::max(a.c_.size(), b.c_.size()), RingOps<R>::zero());
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
        return Polynomial(std::move(r));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
    Polynomial operator-() const {
        std::vector<R> r = c_;
        for (auto& x : r) x = RingOps<R>::zero() - x;
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<R> r(a.c_.size() + b.c_.size() - 1, RingOps<R>::zero());
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (RingOps<R>::is_zero(a.c_[i])) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(const Polynomial& a, const R& s) { return a * Polynomial(s); }
    friend Polynomial operator*(const R& s, const Polynomial& a) { return a * Polynomial(s); }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial shifted(int by) const {  // multiply by x^by
        if (is_zero()) return {};
        std::vector<R> r(c_.size() + by, RingOps<R>::zero());
        for (size_t i = 0; i < c_.size(); ++i) r[i + by] = c_[i];
        return Polynomial(std::move(r));
    }

    Polynomial truncated(int max_degree) const {
        if (max_degree < 0) return {};
        if (degree() <= max_degree) return *this;
        std::vector<R> r(c_.begin(), c_.begin() + max_degree + 1);
        return Polynomial(std::move(r));
    }

    // Coefficient reversal: x^n p(1/x) for n = degree().
    Polynomial reversed() const {
        std::vector<R> r(c_.rbegin(), c_.rend());
        return Polynomial(std::move(r));
    }

    template <class T>
    T eval(const T& x) const {  // Horner; T must embed R via T(coeff)
        T acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + T(*it);
        return acc;
    }

    Polynomial derivative() const {
        if (degree() < 1) return {};
        std::vector<R> r(c_.size() - 1, RingOps<R>::zero());
        for (size_t i = 1; i < c_.size(); ++i) {
            R m = RingOps<R>::zero();
            for (size_t j = 0; j < i; ++j) m = m + c_[i];  // i * c_i without requiring R(int)
            r[i - 1] = m;
        }
        return Polynomial(std::move(r));
    }

  private:
    void trim() {
        while (!c_.empty() && RingOps<R>::is_zero(c_.back())) c_.pop_back();
    }
    std::vector<R> c_;
};

template <class R>
struct RingOps<Polynomial<R>> {
    static Polynomial<R> zero() { return Polynomial<R>{}; }
    static Polynomial<R> one() { return Polynomial<R>(RingOps<R>::one()); }
    static bool is_zero(const Polynomial<R>& p) { return p.is_zero(); }
    static bool is_unit(const Polynomial<R>& p) {
        return p.degree() == 0 && RingOps<R>::is_unit(p.coeff(0));
    }
    static Polynomial<R> inverse(const Polynomial<R>& p) {
        if (!is_unit(p)) throw std::domain_error("polynomial is not a unit");
        return Polynomial<R>(RingOps<R>::inverse(p.coeff(0)));
    }
};

using RatPoly = Polynomial<Rational>;

// Euclidean division over a field coefficient ring.
inline RatPoly poly_divmod(const RatPoly& a, const RatPoly& b, RatPoly* rem) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> r(a.coeffs());
    int db = b.degree();
    std::vector<Rational> q(std::max(0, a.degree() - db + 1), Rational(0));
    for (int i = a.degree(); i >= db; --i) {
        if (r[i] == 0) continue;
        Rational f = r[i] / b.leading();
        q[i - db] = f;
        for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.coeff(j);
    }
    if (rem) *rem = RatPoly(std::move(r));
    return RatPoly(std::move(q));
}

inline RatPoly poly_make_monic(const RatPoly& p) {
    if (p.is_zero() || p.leading() == 1) return p;
    std::vector<Rational> c(p.coeffs());
    Rational lead = p.leading();
    for (auto& x : c) x /= lead;
    return RatPoly(std::move(c));
}

// Euclid with monic normalization at every step; without it the coefficient
// sizes explode on moderate degrees.
inline RatPoly poly_gcd(RatPoly a, RatPoly b) {
    a = poly_make_monic(a);
    b = poly_make_monic(b);
    while (!b.is_zero()) {
        RatPoly r;
        poly_divmod(a, b, &r);
        a = std::move(b);
        b = poly_make_monic(r);
    }
    return a;
}

}  // namespace etri
