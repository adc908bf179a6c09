#pragma once

#include "etri/polynomial.hpp"
#include "etri/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace etri {

// Truncated series in a main variable whose coefficients are polynomials in an
// auxiliary variable, truncated in both directions: main order N, aux degree
// cap A. Used for phi(t,G)/omega(t,G) (main G, aux t) and for the hull series
// H(g, alpha^2) (main g, aux alpha^2, exponent = power of alpha^2).
class BivariateSeries {
  public:
    BivariateSeries() = default;
    BivariateSeries(std::string main_var, std::string aux_var, int main_order, int aux_cap)
        : main_(std::move(main_var)),
          aux_(std::move(aux_var)),
          cap_(aux_cap),
          c_(main_order + 1) {
        if (main_order < 0 || aux_cap < 0) throw std::invalid_argument("bivariate orders must be >= 0");
    }

    static BivariateSeries from_scalar_series(const RatSeries& s, const std::string& aux_var, int aux_cap) {
        BivariateSeries r(s.var(), aux_var, s.order(), aux_cap);
        for (int n = 0; n <= s.order(); ++n) r.c_[n] = RatPoly(s.coeff(n));
        return r;
    }
    // constant-in-main series equal to a polynomial in the aux variable
    static BivariateSeries from_aux_poly(const RatPoly& p, const std::string& main_var,
                                         const std::string& aux_var, int main_order, int aux_cap) {
        BivariateSeries r(main_var, aux_var, main_order, aux_cap);
        r.c_[0] = p.truncated(aux_cap);
        return r;
    }

    const std::string& main_var() const { return main_; }
    const std::string& aux_var() const { return aux_; }
    int main_order() const { return static_cast<int>(c_.size()) - 1; }
    int aux_cap() const { return cap_; }
    const RatPoly& coeff(int n) const { return c_.at(n); }
    void set_coeff(int n, const RatPoly& p) {
        if (p.degree() > cap_) throw std::invalid_argument("aux degree above cap");
        c_.at(n) = p;
    }

    bool is_zero() const {
        for (const auto& p : c_)
            if (!p.is_zero()) return false;
        return true;
    }

    BivariateSeries truncated(int main_order, int aux_cap) const {
        BivariateSeries r(main_, aux_, std::min(main_order, this->main_order()), std::min(aux_cap, cap_));
        for (int n = 0; n <= r.main_order(); ++n) r.c_[n] = c_[n].truncated(r.cap_);
        return r;
    }

    friend BivariateSeries operator+(const BivariateSeries& a, const BivariateSeries& b) {
        auto [n, cap] = meet(a, b);
        BivariateSeries r(a.main_, a.aux_, n, cap);
        for (int i = 0; i <= n; ++i) r.c_[i] = (a.c_[i] + b.c_[i]).truncated(cap);
        return r;
    }
    friend BivariateSeries operator-(const BivariateSeries& a, const BivariateSeries& b) {
        auto [n, cap] = meet(a, b);
        BivariateSeries r(a.main_, a.aux_, n, cap);
        for (int i = 0; i <= n; ++i) r.c_[i] = (a.c_[i] - b.c_[i]).truncated(cap);
        return r;
    }
    BivariateSeries operator-() const {
        BivariateSeries r = *this;
        for (auto& p : r.c_) p = -p;
        return r;
    }
    friend BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b) {
        auto [n, cap] = meet(a, b);
        BivariateSeries r(a.main_, a.aux_, n, cap);
        for (int i = 0; i <= n; ++i) {
            if (a.c_[i].is_zero()) continue;
            for (int j = 0; i + j <= n; ++j) {
                if (b.c_[j].is_zero()) continue;
                r.c_[i + j] = (r.c_[i + j] + a.c_[i] * b.c_[j]).truncated(cap);
            }
        }
        return r;
    }
    friend BivariateSeries operator*(const BivariateSeries& a, const Rational& s) {
        BivariateSeries r = a;
        for (auto& p : r.c_) p = p * s;
        return r;
    }

    // Division; the divisor's main-constant coefficient must be a unit
    // (a nonzero constant polynomial in the aux variable).
    friend BivariateSeries operator/(const BivariateSeries& a, const BivariateSeries& b) {
        auto [n, cap] = meet(a, b);
        if (!RingOps<RatPoly>::is_unit(b.c_[0]))
            throw std::domain_error("bivariate division needs a constant unit leading coefficient");
        Rational inv0 = 1 / b.c_[0].coeff(0);
        BivariateSeries r(a.main_, a.aux_, n, cap);
        for (int i = 0; i <= n; ++i) {
            RatPoly acc = a.c_[i];
            for (int j = 1; j <= i; ++j) acc = acc - b.c_[j] * r.c_[i - j];
            r.c_[i] = (acc * inv0).truncated(cap);
        }
        return r;
    }

    friend bool operator==(const BivariateSeries& a, const BivariateSeries& b) {
        auto [n, cap] = meet(a, b);
        for (int i = 0; i <= n; ++i)
            if (a.c_[i].truncated(cap) != b.c_[i].truncated(cap)) return false;
        return true;
    }
    friend bool operator!=(const BivariateSeries& a, const BivariateSeries& b) { return !(a == b); }

    // Divide by the aux variable: every coefficient polynomial must have zero
    // constant term. This is the "bracket divisible by t" assertion.
    BivariateSeries div_aux() const {
        BivariateSeries r(main_, aux_, main_order(), cap_);
        for (int n = 0; n <= main_order(); ++n) {
            const RatPoly& p = c_[n];
            if (p.coeff(0) != 0)
                throw std::domain_error("bivariate series not divisible by " + aux_ +
                                        " at main order " + std::to_string(n));
            if (p.is_zero()) continue;
            std::vector<Rational> shifted(p.coeffs().begin() + 1, p.coeffs().end());
            if (shifted.empty()) shifted.push_back(0);
            r.c_[n] = RatPoly(std::move(shifted));
        }
        return r;
    }

    BivariateSeries mul_aux() const {  // multiply by the aux variable
        BivariateSeries r(main_, aux_, main_order(), cap_);
        for (int n = 0; n <= main_order(); ++n) r.c_[n] = c_[n].shifted(1).truncated(cap_);
        return r;
    }

    // Set the aux variable to zero: the scalar series of constant terms.
    RatSeries aux_at_zero() const {
        RatSeries s(main_, main_order());
        for (int n = 0; n <= main_order(); ++n) s.set_coeff(n, c_[n].coeff(0));
        return s;
    }

    // Extract the scalar series multiplying aux^k.
    RatSeries aux_coefficient(int k) const {
        RatSeries s(main_, main_order());
        for (int n = 0; n <= main_order(); ++n) s.set_coeff(n, c_[n].coeff(k));
        return s;
    }

    // Compose the main variable with a scalar series of positive valuation
    // (coefficients stay polynomials in the aux variable).
    BivariateSeries main_composed(const RatSeries& inner) const {
        if (inner.coeff(0) != 0)
            throw std::domain_error("main composition requires zero constant term");
        int n = std::min(main_order(), inner.order());
        BivariateSeries in = from_scalar_series(inner.truncated(n), aux_, cap_);
        BivariateSeries acc(inner.var(), aux_, n, cap_);
        acc.set_coeff(0, c_[main_order()].truncated(cap_));
        for (int j = main_order() - 1; j >= 0; --j) {
            acc = acc * in;
            acc.set_coeff(0, acc.coeff(0) + c_[j].truncated(cap_));
        }
        return acc;
    }

    // Substitute a scalar series (in the main variable) for the aux variable.
    // Requires the substitute to have zero constant term so that aux powers
    // beyond the main order cannot contribute.
    RatSeries aux_substituted(const RatSeries& t_in) const {
        if (t_in.var() != main_)
            throw std::invalid_argument("aux substitution must be a series in the main variable");
        if (t_in.coeff(0) != 0)
            throw std::domain_error("aux substitution requires zero constant term");
        int n = std::min(main_order(), t_in.order());
        RatSeries result(main_, n);
        RatSeries tin = t_in.truncated(n);
        for (int i = 0; i <= n; ++i) {
            if (c_[i].is_zero()) continue;
            RatSeries horner = RatSeries::constant(main_, c_[i].coeff(c_[i].degree()), n);
            for (int j = c_[i].degree() - 1; j >= 0; --j) {
                horner = horner * tin;
                horner.set_coeff(0, horner.coeff(0) + c_[i].coeff(j));
            }
            result = result + horner.shifted_up(i);
        }
        return result;
    }

  private:
    static std::pair<int, int> meet(const BivariateSeries& a, const BivariateSeries& b) {
        if (a.main_ != b.main_ || a.aux_ != b.aux_)
            throw std::invalid_argument("bivariate variable mismatch");
        return {std::min(a.main_order(), b.main_order()), std::min(a.cap_, b.cap_)};
    }

    std::string main_, aux_;
    int cap_ = 0;
    std::vector<RatPoly> c_;
};

}  // namespace etri
