#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "derivkit/ratfunc.hpp"

namespace derivkit {

// Formal derivative D on Q(t) with D(t) = 1, extended by the quotient
// rule. D is Q-linear and satisfies the Leibniz law exactly.
RatFunc formal_derivative(const RatFunc& u);
RatFunc iterated_derivative(RatFunc u, unsigned k);

// Additive map on Q(t) of the form x -> id_coeff*x + sum_k c_k * D^k(x)
// with coefficients in Q(t). Zero coefficients are never stored.
class OperatorFunc {
public:
    OperatorFunc() : id_coeff_(RatFunc::zero()) {}

    static OperatorFunc zero() { return OperatorFunc(); }
    static OperatorFunc scaled_identity(RatFunc lambda);
    // c * D^k, k >= 1.
    static OperatorFunc derivation_term(unsigned k, RatFunc c);

    const RatFunc& id_coeff() const { return id_coeff_; }
    const std::map<unsigned, RatFunc>& deriv_coeffs() const { return deriv_coeffs_; }
    RatFunc coeff(unsigned k) const;

    bool is_zero() const { return id_coeff_.is_zero() && deriv_coeffs_.empty(); }
    unsigned order_bound() const { return deriv_coeffs_.empty() ? 0 : deriv_coeffs_.rbegin()->first; }

    RatFunc apply(const RatFunc& x) const;

    OperatorFunc operator+(const OperatorFunc& rhs) const;
    OperatorFunc operator-(const OperatorFunc& rhs) const;
    OperatorFunc scaled(const RatFunc& c) const;

    bool operator==(const OperatorFunc& rhs) const {
        return id_coeff_ == rhs.id_coeff_ && deriv_coeffs_ == rhs.deriv_coeffs_;
    }
    bool operator!=(const OperatorFunc& rhs) const { return !(*this == rhs); }

    // A RatFunc x with apply(x) != 0; scanning t^m for m = 0..order_bound
    // must succeed for a nonzero operator (triangular action on powers).
    std::optional<RatFunc> nonvanishing_point() const;

private:
    void set_coeff(unsigned k, RatFunc c);
    RatFunc id_coeff_;
    std::map<unsigned, RatFunc> deriv_coeffs_;
};

// delta_alpha f : x -> f(alpha*x) - alpha*f(x), in closed form via the
// Leibniz expansion of D^k(alpha*x). The identity part contributes
// nothing; each c_k D^k term contributes sum_{j=1..k} C(k,j) c_k D^j(alpha) D^{k-j}.
OperatorFunc delta(const RatFunc& alpha, const OperatorFunc& f);

// Composition delta_{alpha_1} o ... o delta_{alpha_m} f, alpha_1 outermost.
// The deltas commute on this class, so the order is observationally
// irrelevant; we apply alphas back-to-front to match the notation.
struct DeltaChainSpec {
    std::vector<RatFunc> alphas;  // m >= 1
    OperatorFunc target;
};
OperatorFunc delta_chain(const DeltaChainSpec& spec);

struct OrderWitness {
    std::vector<RatFunc> alphas;
    RatFunc x;
    RatFunc value;  // nonzero; re-evaluating the chain at x reproduces it
};

struct OrderVerdict {
    bool is_order_n = false;
    unsigned n = 0;
    std::optional<OrderWitness> witness;  // present exactly when !is_order_n
    unsigned trials_run = 0;
    std::uint64_t seed = 0;
};

// Order-n derivation predicate: f(1) = 0 and every (n+1)-fold delta chain
// annihilates f. Chains are sampled at `trials` pseudo-random tuples of
// nonconstant rational functions of degree <= 3. A nonzero chain value is
// a sound certificate of failure. Positive answers for operators of top
// D-degree <= n are additionally forced structurally: each delta strictly
// lowers the top D-degree, so n+1 applications annihilate any such operator.
OrderVerdict is_order_n_derivation(const OperatorFunc& f, unsigned n, unsigned trials,
                                   std::uint64_t seed);

}  // namespace derivkit
