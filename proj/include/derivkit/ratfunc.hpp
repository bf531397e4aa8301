#pragma once

#include "derivkit/poly.hpp"

namespace derivkit {

// Normalized element of Q(t): coprime num/den, monic denominator.
// Structural equality coincides with equality in the field.
class RatFunc {
public:
    RatFunc() : num_(), den_(Poly::one()) {}
    explicit RatFunc(Rational constant) : num_(Poly(std::move(constant))), den_(Poly::one()) {}
    explicit RatFunc(Poly p) : num_(std::move(p)), den_(Poly::one()) {}
    // Normalizing constructor. Throws std::domain_error("division by zero in Q(t)").
    RatFunc(Poly num, Poly den);

    static RatFunc zero() { return RatFunc(); }
    static RatFunc one() { return RatFunc(Rational(1)); }
    static RatFunc t() { return RatFunc(Poly::t()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    // True when the value lies in Q.
    bool is_constant() const;
    Rational constant_value() const;  // requires is_constant()

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& rhs) const;
    RatFunc operator-(const RatFunc& rhs) const;
    RatFunc operator*(const RatFunc& rhs) const;
    RatFunc operator/(const RatFunc& rhs) const;  // throws on zero divisor
    RatFunc inv() const;                          // throws on zero

    // Evaluation at a rational point; throws std::domain_error at a pole.
    Rational eval(const Rational& x) const;

    bool operator==(const RatFunc& rhs) const { return num_ == rhs.num_ && den_ == rhs.den_; }
    bool operator!=(const RatFunc& rhs) const { return !(*this == rhs); }

private:
    Poly num_;
    Poly den_;
};

inline RatFunc ratfunc_normalize(Poly num, Poly den) {
    return RatFunc(std::move(num), std::move(den));
}

}  // namespace derivkit
