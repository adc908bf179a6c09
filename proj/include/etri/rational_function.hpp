#pragma once

#include "etri/polynomial.hpp"
#include "etri/series.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace etri {

// Reduced fraction of rational-coefficient polynomials in one named variable.
// Canonical form: gcd(num, den) = 1 and monic denominator, so operator== is
// structural equality of values.
class RationalFunction {
  public:
    RationalFunction() : var_("x"), num_(), den_(RingOps<RatPoly>::one()) {}
    RationalFunction(std::string var, RatPoly num, RatPoly den)
        : var_(std::move(var)), num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
        reduce();
    }
    static RationalFunction from_poly(const std::string& var, RatPoly p) {
        return RationalFunction(var, std::move(p), RingOps<RatPoly>::one());
    }
    static RationalFunction constant(const std::string& var, const Rational& c) {
        return from_poly(var, RatPoly(c));
    }
    static RationalFunction identity(const std::string& var) {
        return from_poly(var, RatPoly::monomial(1, 1));
    }

    const std::string& var() const { return var_; }
    const RatPoly& num() const { return num_; }
    const RatPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        a.check(b);
        return RationalFunction(a.var_, a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        a.check(b);
        return RationalFunction(a.var_, a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    RationalFunction operator-() const { return RationalFunction(var_, -num_, den_); }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        a.check(b);
        return RationalFunction(a.var_, a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        a.check(b);
        if (b.is_zero()) throw std::domain_error("division by zero rational function");
        return RationalFunction(a.var_, a.num_ * b.den_, a.den_ * b.num_);
    }
    friend RationalFunction operator*(const RationalFunction& a, const Rational& s) {
        return RationalFunction(a.var_, a.num_ * s, a.den_);
    }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.var_ == b.var_ && a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    RationalFunction pow(long e) const {
        RationalFunction r = constant(var_, 1), x = *this;
        bool invert = e < 0;
        if (invert) e = -e;
        for (; e > 0; e >>= 1) {
            if (e & 1) r = r * x;
            if (e > 1) x = x * x;
        }
        if (invert) r = constant(var_, 1) / r;
        return r;
    }

    // Substitute another rational function for the variable.
    RationalFunction substituted(const RationalFunction& inner) const {
        RationalFunction n = eval_fraction(num_, inner);
        RationalFunction d = eval_fraction(den_, inner);
        return n / d;
    }

    // f(1/x) as a reduced rational function (used for the x -> 1/x symmetry checks).
    RationalFunction reciprocal_substituted() const {
        int dn = num_.degree(), dd = den_.degree();
        int m = std::max(dn, dd);
        RatPoly n = num_.reversed().shifted(m - dn);
        RatPoly d = den_.reversed().shifted(m - dd);
        return RationalFunction(var_, std::move(n), std::move(d));
    }

    template <class T>
    T eval(const T& x) const {
        T d = den_.template eval<T>(x);
        if (d == T(0)) throw std::domain_error("rational function evaluated at a pole");
        return num_.template eval<T>(x) / d;
    }

    RationalFunction derivative() const {
        return RationalFunction(var_, num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    // Power series expansion at 0 (denominator must not vanish there).
    RatSeries expand(int order) const {
        if (den_.coeff(0) == 0) throw std::domain_error("rational function has a pole at 0");
        RatSeries n(var_, order), d(var_, order);
        for (int i = 0; i <= std::min(order, num_.degree()); ++i) n.set_coeff(i, num_.coeff(i));
        for (int i = 0; i <= std::min(order, den_.degree()); ++i) d.set_coeff(i, den_.coeff(i));
        return n / d;
    }

  private:
    void check(const RationalFunction& o) const {
        if (var_ != o.var_)
            throw std::invalid_argument("rational function variable mismatch: " + var_ + " vs " + o.var_);
    }
    static RationalFunction eval_fraction(const RatPoly& p, const RationalFunction& inner) {
        RationalFunction acc = constant(inner.var(), 0);
        for (int i = p.degree(); i >= 0; --i) {
            acc = acc * inner + constant(inner.var(), p.coeff(i));
        }
        return acc;
    }
    void reduce() {
        if (num_.is_zero()) {
            den_ = RingOps<RatPoly>::one();
            return;
        }
        RatPoly g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = poly_divmod(num_, g, nullptr);
            den_ = poly_divmod(den_, g, nullptr);
        }
        Rational lead = den_.leading();
        if (lead != 1) {
            std::vector<Rational> n(num_.coeffs()), d(den_.coeffs());
            for (auto& x : n) x /= lead;
            for (auto& x : d) x /= lead;
            num_ = RatPoly(std::move(n));
            den_ = RatPoly(std::move(d));
        }
    }

    std::string var_;
    RatPoly num_, den_;
};

}  // namespace etri
