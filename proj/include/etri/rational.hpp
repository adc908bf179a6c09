#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>

namespace etri {

// Exact arithmetic substrate. GMP keeps rationals canonical (gcd-reduced,
// positive denominator), which is what makes structural equality tests valid.
using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Integer binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Integer r = 1;
    for (long j = 0; j < k; ++j) {
        r *= Integer(n - j);
        r /= Integer(j + 1);
    }
    return r;
}

inline Integer int_pow(const Integer& b, long e) {
    Integer r = 1, x = b;
    for (long n = e; n > 0; n >>= 1) {
        if (n & 1) r *= x;
        if (n > 1) x *= x;
    }
    return r;
}

inline Rational rat_pow(const Rational& b, long e) {
    if (e < 0) return Rational(1) / rat_pow(b, -e);
    Rational r = 1, x = b;
    for (long n = e; n > 0; n >>= 1) {
        if (n & 1) r *= x;
        if (n > 1) x *= x;
    }
    return r;
}

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

inline std::string to_string(const Rational& q) { return q.str(); }

}  // namespace etri
