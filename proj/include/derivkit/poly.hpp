#pragma once

#include <optional>
#include <vector>

#include "derivkit/rational.hpp"

namespace derivkit {

// Dense univariate polynomial over Q, coefficients ascending.
// The zero polynomial has an empty coefficient vector and no degree.
class Poly {
public:
    Poly() = default;
    explicit Poly(Rational constant);
    explicit Poly(std::vector<Rational> ascending_coeffs);

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(Rational(1)); }
    // The indeterminate t.
    static Poly t() { return Poly({Rational(0), Rational(1)}); }

    bool is_zero() const { return coeffs_.empty(); }
    // Empty optional marks the zero polynomial.
    std::optional<std::size_t> degree() const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(std::size_t k) const;
    Rational leading() const;

    Poly operator-() const;
    Poly operator+(const Poly& rhs) const;
    Poly operator-(const Poly& rhs) const;
    Poly operator*(const Poly& rhs) const;
    Poly scaled(const Rational& c) const;

    // Euclidean division: *this = q*divisor + r with deg r < deg divisor.
    // Throws std::domain_error on zero divisor.
    std::pair<Poly, Poly> divrem(const Poly& divisor) const;

    Poly derivative() const;
    Poly monic() const;
    Rational eval(const Rational& x) const;

    bool operator==(const Poly& rhs) const { return coeffs_ == rhs.coeffs_; }
    bool operator!=(const Poly& rhs) const { return !(*this == rhs); }

private:
    void trim();
    std::vector<Rational> coeffs_;
};

// Monic gcd via the Euclidean remainder sequence.
// Throws std::domain_error when both inputs are zero.
Poly poly_gcd(const Poly& p, const Poly& q);

}  // namespace derivkit
