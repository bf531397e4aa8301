#include "derivkit/operator_func.hpp"

#include <stdexcept>
#include <utility>

#include "derivkit/rng.hpp"

namespace derivkit {

RatFunc formal_derivative(const RatFunc& u) {
    // (n/d)' = (n'd - nd')/d^2
    Poly n = u.num().derivative() * u.den() - u.num() * u.den().derivative();
    return RatFunc(std::move(n), u.den() * u.den());
}

RatFunc iterated_derivative(RatFunc u, unsigned k) {
    for (unsigned i = 0; i < k; ++i) u = formal_derivative(u);
    return u;
}

OperatorFunc OperatorFunc::scaled_identity(RatFunc lambda) {
    OperatorFunc f;
    f.id_coeff_ = std::move(lambda);
    return f;
}

OperatorFunc OperatorFunc::derivation_term(unsigned k, RatFunc c) {
    if (k == 0) throw std::invalid_argument("derivation term needs k >= 1");
    OperatorFunc f;
    f.set_coeff(k, std::move(c));
    return f;
}

RatFunc OperatorFunc::coeff(unsigned k) const {
    if (k == 0) return id_coeff_;
    auto it = deriv_coeffs_.find(k);
    return it == deriv_coeffs_.end() ? RatFunc::zero() : it->second;
}

void OperatorFunc::set_coeff(unsigned k, RatFunc c) {
    if (c.is_zero()) {
        deriv_coeffs_.erase(k);
    } else {
        deriv_coeffs_[k] = std::move(c);
    }
}

RatFunc OperatorFunc::apply(const RatFunc& x) const {
    RatFunc acc = id_coeff_ * x;
    RatFunc dx = x;
    unsigned level = 0;
    for (const auto& [k, c] : deriv_coeffs_) {
        while (level < k) {
            dx = formal_derivative(dx);
            ++level;
        }
        acc = acc + c * dx;
    }
    return acc;
}

OperatorFunc OperatorFunc::operator+(const OperatorFunc& rhs) const {
    OperatorFunc out;
    out.id_coeff_ = id_coeff_ + rhs.id_coeff_;
    out.deriv_coeffs_ = deriv_coeffs_;
    for (const auto& [k, c] : rhs.deriv_coeffs_) {
        out.set_coeff(k, out.coeff(k) + c);
    }
    return out;
}

OperatorFunc OperatorFunc::operator-(const OperatorFunc& rhs) const {
    return *this + rhs.scaled(RatFunc(Rational(-1)));
}

OperatorFunc OperatorFunc::scaled(const RatFunc& c) const {
    OperatorFunc out;
    if (c.is_zero()) return out;
    out.id_coeff_ = id_coeff_ * c;
    for (const auto& [k, ck] : deriv_coeffs_) out.deriv_coeffs_[k] = ck * c;
    return out;
}

std::optional<RatFunc> OperatorFunc::nonvanishing_point() const {
    if (is_zero()) return std::nullopt;
    RatFunc x = RatFunc::one();
    const RatFunc t = RatFunc::t();
    for (unsigned m = 0; m <= order_bound(); ++m) {
        if (!apply(x).is_zero()) return x;
        x = x * t;
    }
    // Unreachable for a nonzero operator: the action on 1, t, t^2, ...
    // is triangular in the coefficients.
    throw std::logic_error("nonzero operator vanished on all probe powers");
}

OperatorFunc delta(const RatFunc& alpha, const OperatorFunc& f) {
    OperatorFunc out;
    for (const auto& [k, ck] : f.deriv_coeffs()) {
        // D^k(alpha x) = sum_j C(k,j) D^j(alpha) D^{k-j}(x); j = 0 cancels
        // against -alpha D^k(x).
        Rational binom(1);
        RatFunc dalpha = alpha;
        for (unsigned j = 1; j <= k; ++j) {
            binom = binom * Rational(static_cast<long>(k - j + 1)) / Rational(static_cast<long>(j));
            dalpha = formal_derivative(dalpha);
            RatFunc term = ck * dalpha * RatFunc(binom);
            unsigned target = k - j;
            out = out + (target == 0 ? OperatorFunc::scaled_identity(term)
                                     : OperatorFunc::derivation_term(target, term));
        }
    }
    return out;
}

OperatorFunc delta_chain(const DeltaChainSpec& spec) {
    OperatorFunc g = spec.target;
    for (auto it = spec.alphas.rbegin(); it != spec.alphas.rend(); ++it) {
        g = delta(*it, g);
    }
    return g;
}

OrderVerdict is_order_n_derivation(const OperatorFunc& f, unsigned n, unsigned trials,
                                   std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    OrderVerdict v;
    v.n = n;
    v.seed = seed;

    RatFunc at_one = f.apply(RatFunc::one());
    if (!at_one.is_zero()) {
        v.is_order_n = false;
        v.witness = OrderWitness{{}, RatFunc::one(), at_one};
        return v;
    }

    ValueGen gen(seed);
    for (unsigned trial = 0; trial < trials; ++trial) {
        DeltaChainSpec spec;
        spec.target = f;
        spec.alphas.reserve(n + 1);
        for (unsigned i = 0; i <= n; ++i) spec.alphas.push_back(gen.nonconstant_ratfunc(3));
        OperatorFunc chain = delta_chain(spec);
        ++v.trials_run;
        if (!chain.is_zero()) {
            RatFunc x = *chain.nonvanishing_point();
            v.is_order_n = false;
            v.witness = OrderWitness{std::move(spec.alphas), x, chain.apply(x)};
            return v;
        }
    }
    v.is_order_n = true;
    return v;
}

}  // namespace derivkit
