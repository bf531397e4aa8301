#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace derivkit {

// Exact arbitrary-precision rational. GMP keeps the invariant
// gcd(|num|, den) = 1, den >= 1 after canonicalization.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rational_abs(const Rational& q) {
    return q < 0 ? Rational(-q) : q;
}

// 2^n as an exact rational.
inline Rational pow2(unsigned n) {
    Integer p = 1;
    p <<= n;
    return Rational(p);
}

// Renders "p/q", omitting "/q" when q = 1.
inline std::string to_string(const Rational& q) {
    return q.get_str();
}

// Parses "p" or "p/q" with optional leading '-'.
inline Rational rational_from_string(const std::string& s) {
    Rational q;
    if (s.empty() || q.set_str(s, 10) != 0) {
        throw std::invalid_argument("not a rational: '" + s + "'");
    }
    if (q.get_den() == 0) {
        throw std::invalid_argument("zero denominator: '" + s + "'");
    }
    q.canonicalize();
    return q;
}

}  // namespace derivkit
