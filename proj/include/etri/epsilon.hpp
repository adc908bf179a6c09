#pragma once

#include "etri/rational_function.hpp"
#include "etri/series.hpp"

#include <stdexcept>

namespace etri {

// Exact expansion of f((1-eps)/(1+eps)) around eps = 0 for a rational f(x).
//
// Substituting x = (1-e)/(1+e) into P(x) of degree D gives
// P~(e)/(1+e)^D with P~(e) = sum_i p_i (1-e)^i (1+e)^{D-i}, so
// f = P~ (1+e)^{dQ} / (Q~ (1+e)^{dP}). Common powers of (1+e) and of e are
// cleared exactly before the series division, so removable singularities at
// e = 0 cost nothing; a genuine pole is reported with its order.
struct EpsilonPole : std::domain_error {
    int order;
    explicit EpsilonPole(int ord)
        : std::domain_error("pole of order " + std::to_string(ord) + " at eps = 0"), order(ord) {}
};

namespace detail {
inline RatPoly cayley_numerator(const RatPoly& p) {
    int d = p.degree();
    RatPoly one_minus(std::vector<Rational>{1, -1});
    RatPoly one_plus(std::vector<Rational>{1, 1});
    // precompute powers
    std::vector<RatPoly> lo(d + 1), hi(d + 1);
    lo[0] = hi[0] = RingOps<RatPoly>::one();
    for (int i = 1; i <= d; ++i) {
        lo[i] = lo[i - 1] * one_minus;
        hi[i] = hi[i - 1] * one_plus;
    }
    RatPoly acc;
    for (int i = 0; i <= d; ++i) {
        if (p.coeff(i) == 0) continue;
        acc = acc + p.coeff(i) * (lo[i] * hi[d - i]);
    }
    return acc;
}
inline int eps_valuation(const RatPoly& p) {
    for (int i = 0; i <= p.degree(); ++i)
        if (p.coeff(i) != 0) return i;
    return p.degree() + 1;
}
}  // namespace detail

inline RatSeries rf_expand_epsilon(const RationalFunction& f, int order) {
    if (f.is_zero()) return RatSeries("eps", order);
    RatPoly pn = detail::cayley_numerator(f.num());
    RatPoly pd = detail::cayley_numerator(f.den());
    int extra = f.den().degree() - f.num().degree();
    RatPoly one_plus(std::vector<Rational>{1, 1});
    while (extra > 0) {
        pn = pn * one_plus;
        --extra;
    }
    while (extra < 0) {
        pd = pd * one_plus;
        ++extra;
    }
    int vn = detail::eps_valuation(pn), vd = detail::eps_valuation(pd);
    if (vn < vd) throw EpsilonPole(vd - vn);
    int shift = vd;
    RatSeries n("eps", order), d("eps", order);
    for (int i = 0; i <= order; ++i) {
        n.set_coeff(i, pn.coeff(i + shift));
        d.set_coeff(i, pd.coeff(i + shift));
    }
    return n / d;
}

}  // namespace etri
