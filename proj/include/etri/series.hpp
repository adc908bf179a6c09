#pragma once

#include "etri/polynomial.hpp"
#include "etri/rational.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace etri {

// Truncated formal power series over an exact coefficient ring R.
// A value of order N represents the series modulo var^{N+1}; all arithmetic
// truncates to the minimum order of its operands and never extrapolates.
template <class R>
class TruncatedSeries {
  public:
    TruncatedSeries() = default;
    TruncatedSeries(std::string var, int order)
        : var_(std::move(var)), c_(order + 1, RingOps<R>::zero()) {
        if (order < 0) throw std::invalid_argument("series order must be >= 0");
    }
    TruncatedSeries(std::string var, std::vector<R> coeffs) : var_(std::move(var)), c_(std::move(coeffs)) {
        if (c_.empty()) throw std::invalid_argument("series needs at least the constant coefficient");
    }

    static TruncatedSeries constant(const std::string& var, const R& value, int order) {
        TruncatedSeries s(var, order);
        s.c_[0] = value;
        return s;
    }
    static TruncatedSeries identity(const std::string& var, int order) {  // the series "var"
        TruncatedSeries s(var, order);
        if (order >= 1) s.c_[1] = RingOps<R>::one();
        return s;
    }

    const std::string& var() const { return var_; }
    int order() const { return static_cast<int>(c_.size()) - 1; }
    const R& coeff(int n) const {
        if (n < 0 || n > order()) throw std::out_of_range("series coefficient beyond truncation order");
        return c_[n];
    }
    const std::vector<R>& coeffs() const { return c_; }
    void set_coeff(int n, const R& v) { c_.at(n) = v; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!RingOps<R>::is_zero(x)) return false;
        return true;
    }
    int valuation() const {  // order()+1 when the truncated series is zero
        for (int n = 0; n <= order(); ++n)
            if (!RingOps<R>::is_zero(c_[n])) return n;
        return order() + 1;
    }

    TruncatedSeries truncated(int new_order) const {
        if (new_order >= order()) return *this;
        return TruncatedSeries(var_, std::vector<R>(c_.begin(), c_.begin() + new_order + 1));
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        int n = common_order(a, b);
        TruncatedSeries r(a.var_, n);
        for (int i = 0; i <= n; ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        int n = common_order(a, b);
        TruncatedSeries r(a.var_, n);
        for (int i = 0; i <= n; ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }
    TruncatedSeries operator-() const {
        TruncatedSeries r = *this;
        for (auto& x : r.c_) x = RingOps<R>::zero() - x;
        return r;
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        int n = common_order(a, b);
        TruncatedSeries r(a.var_, n);
        for (int i = 0; i <= n; ++i) {
            if (RingOps<R>::is_zero(a.c_[i])) continue;
            for (int j = 0; i + j <= n; ++j) r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
        }
        return r;
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const R& s) {
        TruncatedSeries r = a;
        for (auto& x : r.c_) x = x * s;
        return r;
    }
    friend TruncatedSeries operator*(const R& s, const TruncatedSeries& a) { return a * s; }

    // a / b with b(0) a unit of R: coefficients solved by forward substitution.
    friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
        int n = common_order(a, b);
        if (!RingOps<R>::is_unit(b.c_[0]))
            throw std::domain_error("series division needs an invertible constant term");
        R inv0 = RingOps<R>::inverse(b.c_[0]);
        TruncatedSeries r(a.var_, n);
        for (int i = 0; i <= n; ++i) {
            R acc = a.c_[i];
            for (int j = 1; j <= i; ++j) acc = acc - b.c_[j] * r.c_[i - j];
            r.c_[i] = acc * inv0;
        }
        return r;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        int n = common_order(a, b);
        for (int i = 0; i <= n; ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

    TruncatedSeries shifted_up(int m) const {  // multiply by var^m, keeping the order
        TruncatedSeries r(var_, order());
        for (int i = 0; i + m <= order(); ++i) r.c_[i + m] = c_[i];
        return r;
    }
    // Divide by var^m; requires the low coefficients to vanish. Order drops by m.
    TruncatedSeries shifted_down(int m) const {
        if (order() < m) throw std::domain_error("series too short to divide by var^m");
        for (int i = 0; i < m; ++i)
            if (!RingOps<R>::is_zero(c_[i]))
                throw std::domain_error("series is not divisible by var^" + std::to_string(m));
        return TruncatedSeries(var_, std::vector<R>(c_.begin() + m, c_.end()));
    }

    static int common_order(const TruncatedSeries& a, const TruncatedSeries& b) {
        if (a.var_ != b.var_)
            throw std::invalid_argument("series variable mismatch: " + a.var_ + " vs " + b.var_);
        return std::min(a.order(), b.order());
    }

  private:
    std::string var_;
    std::vector<R> c_;
};

using RatSeries = TruncatedSeries<Rational>;

// sqrt for constant term 1: coefficients from 2 s_0 s_n = a_n - sum_{0<j<n} s_j s_{n-j}.
inline RatSeries series_sqrt(const RatSeries& a) {
    if (a.coeff(0) != 1) throw std::domain_error("series sqrt requires constant term 1");
    RatSeries s(a.var(), a.order());
    s.set_coeff(0, 1);
    for (int n = 1; n <= a.order(); ++n) {
        Rational acc = a.coeff(n);
        for (int j = 1; j < n; ++j) acc -= s.coeff(j) * s.coeff(n - j);
        s.set_coeff(n, acc / 2);
    }
    return s;
}

// outer(inner) with inner(0) = 0, exact Horner in the truncated ring.
template <class R>
TruncatedSeries<R> series_compose(const TruncatedSeries<R>& outer, const TruncatedSeries<R>& inner) {
    if (!RingOps<R>::is_zero(inner.coeff(0)))
        throw std::domain_error("series composition requires zero constant term of the inner series");
    int n = std::min(outer.order(), inner.order());
    TruncatedSeries<R> acc = TruncatedSeries<R>::constant(inner.var(), outer.coeff(outer.order()), n);
    TruncatedSeries<R> in = inner.truncated(n);
    for (int j = outer.order() - 1; j >= 0; --j) {
        acc = acc * in;
        acc.set_coeff(0, acc.coeff(0) + outer.coeff(j));
    }
    return acc;
}

// Compositional inverse of a with a(0)=0 and invertible a'(0):
// iterate x <- (id - (a - a1*x)) / a1 gaining one settled order per sweep.
inline RatSeries series_revert(const RatSeries& a) {
    if (a.coeff(0) != 0) throw std::domain_error("series reversion requires zero constant term");
    if (a.order() < 1 || a.coeff(1) == 0)
        throw std::domain_error("series reversion requires an invertible linear coefficient");
    int n = a.order();
    Rational a1 = a.coeff(1);
    RatSeries x = RatSeries::identity(a.var(), n) * (Rational(1) / a1);
    for (int sweep = 0; sweep < n; ++sweep) {
        RatSeries comp = series_compose(a, x);  // should converge to identity
        RatSeries tail = comp - RatSeries::identity(a.var(), n);
        if (tail.is_zero()) break;
        x = x - tail * (Rational(1) / a1);
    }
    return x;
}

}  // namespace etri
