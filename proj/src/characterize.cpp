#include "derivkit/characterize.hpp"

#include <utility>

#include "derivkit/rng.hpp"

namespace derivkit {

RatFunc d_functional(const OperatorFunc& f, unsigned n, const RatFunc& alpha) {
    DeltaChainSpec spec;
    spec.alphas.assign(n + 1, alpha);
    spec.target = f;
    return delta_chain(spec).apply(RatFunc::one());
}

LinearSplit decompose_linear_part(const OperatorFunc& f, unsigned n, unsigned trials,
                                  std::uint64_t seed) {
    LinearSplit split;
    split.lambda = f.apply(RatFunc::one());
    split.derivation_part = f - OperatorFunc::scaled_identity(split.lambda);
    split.verified_order = n;
    split.verdict = is_order_n_derivation(split.derivation_part, n, trials, seed);
    return split;
}

namespace {

Rational nested_difference(const BlackBoxFunc& p, std::span<const Rational> ys,
                           const Rational& x0) {
    if (ys.empty()) return p(x0);
    auto rest = ys.subspan(0, ys.size() - 1);
    const Rational& h = ys.back();
    return nested_difference(p, rest, x0 + h) - nested_difference(p, rest, x0);
}

Rational factorial(unsigned k) {
    Rational f(1);
    for (unsigned i = 2; i <= k; ++i) f *= Rational(static_cast<long>(i));
    return f;
}

}  // namespace

Rational extract_multiadditive(const BlackBoxFunc& p, unsigned k, std::span<const Rational> ys,
                               const Rational& x0) {
    if (k < 1 || ys.size() != k) throw std::invalid_argument("need exactly k >= 1 spans");
    return nested_difference(p, ys, x0) / factorial(k);
}

PolyDecomposition poly_decompose(const BlackBoxFunc& p, unsigned n, unsigned probes,
                                 std::uint64_t seed) {
    PolyDecomposition out;
    out.degree_bound = n;
    out.probes = probes;
    out.seed = seed;
    out.components.resize(n + 1);

    // current = p minus the components already peeled off.
    std::vector<Rational> coeffs(n + 1, Rational(0));
    auto current = [&](const Rational& x) {
        Rational v = p(x);
        Rational xp(1);
        for (unsigned j = 0; j <= n; ++j) {
            if (coeffs[j] != 0) v -= coeffs[j] * xp;
            xp *= x;
        }
        return v;
    };

    for (unsigned k = n + 1; k-- > 0;) {
        Rational ck;
        if (k == 0) {
            ck = current(Rational(0));
        } else {
            std::vector<Rational> ones(k, Rational(1));
            ck = extract_multiadditive(current, k, ones, Rational(0));
        }
        coeffs[k] = ck;
        out.components[k] = MonomialComponent{ck, k};
    }

    ValueGen gen(seed);
    for (unsigned i = 0; i < probes; ++i) {
        Rational x = gen.rational(1000, 100);
        Rational r = current(x);
        if (r != 0) throw NotPolynomialError(x, r);
    }
    out.residual_zero = true;
    return out;
}

TraceMonomial regular_trace_to_monomial(const MultiadditiveFunc& F, unsigned k, unsigned probes,
                                        std::uint64_t seed) {
    TraceMonomial result;
    std::vector<Rational> ones(k, Rational(1));
    result.c = F(ones);

    ValueGen gen(seed);
    std::vector<Rational> tuple(k);
    for (unsigned i = 0; i < probes; ++i) {
        Rational prod(1);
        for (auto& q : tuple) {
            q = gen.rational();
            prod *= q;
        }
        if (F(tuple) != result.c * prod) {
            result.verified = false;
            result.failing_tuple = tuple;
            return result;
        }
    }
    result.verified = true;
    return result;
}

}  // namespace derivkit
