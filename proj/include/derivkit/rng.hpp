#pragma once

#include <cstdint>
#include <random>

#include "derivkit/ratfunc.hpp"

namespace derivkit {

// Deterministic generator of rationals, polynomials and rational
// functions. Every verdict carries the seed that drove it.
class ValueGen {
public:
    explicit ValueGen(std::uint64_t seed) : rng_(seed) {}

    Rational rational(long max_abs_num = 20, long max_den = 20) {
        std::uniform_int_distribution<long> num(-max_abs_num, max_abs_num);
        std::uniform_int_distribution<long> den(1, max_den);
        Rational q(num(rng_), den(rng_));
        q.canonicalize();
        return q;
    }

    Rational nonzero_rational(long max_abs_num = 20, long max_den = 20) {
        for (;;) {
            Rational q = rational(max_abs_num, max_den);
            if (q != 0) return q;
        }
    }

    // |x| <= bound, with denominator up to 64.
    Rational rational_in_range(const Rational& bound) {
        std::uniform_int_distribution<long> den(1, 64);
        long d = den(rng_);
        Integer top = bound.get_num() * d / bound.get_den();
        if (top == 0) return Rational(0);
        // Draw the numerator uniformly in [-top, top] via a 64-bit draw
        // reduced mod the window size (window fits in 64 bits at desk scale).
        unsigned long window = mpz_get_ui(Integer(2 * top + 1).get_mpz_t());
        std::uniform_int_distribution<unsigned long> pick(0, window - 1);
        Integer numerator = Integer(pick(rng_)) - top;
        Rational q(numerator, Integer(d));
        q.canonicalize();
        return q;
    }

    Poly poly(unsigned max_deg, long coeff_bound = 9) {
        std::uniform_int_distribution<unsigned> deg(0, max_deg);
        std::uniform_int_distribution<long> c(-coeff_bound, coeff_bound);
        unsigned d = deg(rng_);
        std::vector<Rational> coeffs(d + 1);
        for (auto& k : coeffs) k = Rational(c(rng_));
        return Poly(std::move(coeffs));
    }

    Poly nonzero_poly(unsigned max_deg, long coeff_bound = 9) {
        for (;;) {
            Poly p = poly(max_deg, coeff_bound);
            if (!p.is_zero()) return p;
        }
    }

    RatFunc ratfunc(unsigned max_deg = 3) {
        return RatFunc(poly(max_deg), nonzero_poly(max_deg));
    }

    RatFunc nonzero_ratfunc(unsigned max_deg = 3) {
        for (;;) {
            RatFunc f = ratfunc(max_deg);
            if (!f.is_zero()) return f;
        }
    }

    // Depends on t: degree of num or den is >= 1 after normalization.
    RatFunc nonconstant_ratfunc(unsigned max_deg = 3) {
        for (;;) {
            RatFunc f = ratfunc(max_deg);
            if (!f.is_constant()) return f;
        }
    }

    std::uint64_t raw() { return rng_(); }

private:
    std::mt19937_64 rng_;
};

}  // namespace derivkit
