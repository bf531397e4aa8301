#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "derivkit/blackbox.hpp"
#include "derivkit/operator_func.hpp"

namespace derivkit {

// (Df)(alpha) = delta_alpha^{n+1} f (1).
RatFunc d_functional(const OperatorFunc& f, unsigned n, const RatFunc& alpha);

// Split an additive operator into lambda*id + derivation part, lambda = f(1),
// and check the derivation part at order n. The split always reconstructs f.
struct LinearSplit {
    RatFunc lambda;
    OperatorFunc derivation_part;
    unsigned verified_order = 0;
    OrderVerdict verdict;
};
LinearSplit decompose_linear_part(const OperatorFunc& f, unsigned n, unsigned trials,
                                  std::uint64_t seed);

// Delta_{y1,...,yk} p (x0) / k!: the symmetric k-additive component value
// F_k(y1,...,yk) of a polynomial function of degree <= k. Evaluated by the
// recursive 2^k-term expansion of the nested differences.
Rational extract_multiadditive(const BlackBoxFunc& p, unsigned k, std::span<const Rational> ys,
                               const Rational& x0);

struct MonomialComponent {
    Rational coefficient;
    unsigned degree = 0;
};

struct PolyDecomposition {
    unsigned degree_bound = 0;
    std::vector<MonomialComponent> components;  // ascending by degree, k = 0..n
    bool residual_zero = false;
    unsigned probes = 0;
    std::uint64_t seed = 0;
};

// Raised when poly_decompose finds a nonzero residual: the input is not a
// polynomial function of degree <= n. Carries a witness point.
class NotPolynomialError : public std::runtime_error {
public:
    NotPolynomialError(Rational witness_point, Rational residual_value)
        : std::runtime_error("input is not a polynomial function of degree <= n"),
          witness_point(std::move(witness_point)),
          residual_value(std::move(residual_value)) {}
    Rational witness_point;
    Rational residual_value;
};

// Degree-descending extraction: c_k = Delta_{1,...,1} current (0) / k!,
// subtract c_k x^k and recurse. Over Q every symmetric k-additive map is
// c*x1...xk, so the monomial coefficients are exactly the component traces.
// Throws NotPolynomialError when the residual fails to vanish at the probes.
PolyDecomposition poly_decompose(const BlackBoxFunc& p, unsigned n, unsigned probes,
                                 std::uint64_t seed);

// Exact evaluator of a symmetric k-additive map.
using MultiadditiveFunc = std::function<Rational(std::span<const Rational>)>;

struct TraceMonomial {
    Rational c;  // F(1,...,1)
    bool verified = false;
    std::vector<Rational> failing_tuple;  // nonempty iff !verified
};

// c = F(1,...,1); verified iff F(q1,...,qk) = c*q1...qk at `probes` random
// rational tuples.
TraceMonomial regular_trace_to_monomial(const MultiadditiveFunc& F, unsigned k, unsigned probes,
                                        std::uint64_t seed);

}  // namespace derivkit
