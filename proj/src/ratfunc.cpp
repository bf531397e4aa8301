#include "derivkit/ratfunc.hpp"

#include <stdexcept>
#include <utility>

namespace derivkit {

RatFunc::RatFunc(Poly num, Poly den) {
    if (den.is_zero()) throw std::domain_error("division by zero in Q(t)");
    if (num.is_zero()) {
        num_ = Poly();
        den_ = Poly::one();
        return;
    }
    Poly g = poly_gcd(num, den);
    num = num.divrem(g).first;
    den = den.divrem(g).first;
    Rational lead = den.leading();
    num_ = num.scaled(Rational(1) / lead);
    den_ = den.scaled(Rational(1) / lead);
}

bool RatFunc::is_constant() const {
    auto nd = num_.degree();
    return den_ == Poly::one() && (!nd || *nd == 0);
}

Rational RatFunc::constant_value() const {
    if (!is_constant()) throw std::domain_error("not a constant in Q(t)");
    return num_.coeff(0);
}

RatFunc RatFunc::operator-() const {
    RatFunc out;
    out.num_ = -num_;
    out.den_ = den_;
    return out;
}

RatFunc RatFunc::operator+(const RatFunc& rhs) const {
    return RatFunc(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

RatFunc RatFunc::operator-(const RatFunc& rhs) const {
    return *this + (-rhs);
}

RatFunc RatFunc::operator*(const RatFunc& rhs) const {
    return RatFunc(num_ * rhs.num_, den_ * rhs.den_);
}

RatFunc RatFunc::operator/(const RatFunc& rhs) const {
    if (rhs.is_zero()) throw std::domain_error("division by zero in Q(t)");
    return RatFunc(num_ * rhs.den_, den_ * rhs.num_);
}

RatFunc RatFunc::inv() const {
    if (is_zero()) throw std::domain_error("division by zero in Q(t)");
    return RatFunc(den_, num_);
}

Rational RatFunc::eval(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d == 0) throw std::domain_error("pole of rational function at " + to_string(x));
    return num_.eval(x) / d;
}

}  // namespace derivkit
