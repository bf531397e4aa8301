#pragma once

#include <cstdint>

#include "derivkit/blackbox.hpp"

namespace derivkit {

// epsilon-approximately-additive test fixture: lambda*x plus bounded
// deterministic noise.
struct NoisyFunc {
    BlackBoxFunc base;
    Rational epsilon;
    std::uint64_t seed = 0;
};

// f(x) = core_lambda*x + b(x), where b is a seeded hash-based function
// with values in [0, epsilon] subset of [-epsilon, epsilon] in Q.
// Keeping b nonnegative bounds the Cauchy defect of the result by
// 2*epsilon exactly (b(x+y) - b(x) - b(y) lies in [-2e, e]).
NoisyFunc make_noisy(const Rational& core_lambda, const Rational& epsilon, std::uint64_t seed);

// Truncated Hyers iteration: a_N(x) = f(2^N x) / 2^N, exact.
BlackBoxFunc hyers_stabilize(BlackBoxFunc f, unsigned depth);

// Max of |f(x+y) - f(x) - f(y)| over seeded random pairs with
// |x|, |y| <= range_bound. A lower bound for the true defect.
Rational cauchy_defect(const BlackBoxFunc& f, unsigned samples, std::uint64_t seed,
                       const Rational& range_bound);

struct StabilityReport {
    Rational epsilon_hat;           // measured defect over the run's probe pairs
    unsigned depth = 0;             // N
    Rational residual_sup;          // max |f(x) - a_N(x)| over sample points
    Rational cauchy_defect_of_aN;   // defect of a_N over the matched base pairs
    unsigned samples = 0;
    std::uint64_t seed = 0;
    Rational range_bound;
    bool pass = false;
};

// Recovered linear core; on Q every additive map is linear and every
// order-n derivation vanishes, so the derivation part is identically 0.
struct RecoveryResult {
    StabilityReport report;
    Rational lambda;  // a_N(1)
    unsigned order = 0;
};

// Runs the truncated Hyers iteration and certifies the recovered core.
// epsilon_hat is measured over the random pairs plus the doubling pairs
// (2^j x, 2^j x), j < N, of every sample point, so the telescoping bound
// |f(x) - a_N(x)| <= epsilon_hat*(1 - 2^-N) is an exact consequence.
// pass requires, as exact rational inequalities:
//   residual_sup <= epsilon_hat,
//   cauchy_defect_of_aN <= epsilon_hat / 2^N,
//   |f(x) - lambda*x| <= epsilon_hat*(1 + 2^-N) at every sample point.
RecoveryResult approx_derivation_recover(const BlackBoxFunc& f, unsigned n, unsigned depth,
                                         unsigned samples, std::uint64_t seed,
                                         const Rational& range_bound);

// The probe pairs a recovery run works from; exposed so probe sets can be
// dumped and reloaded for reproduction.
using SamplePairs = std::vector<std::pair<Rational, Rational>>;
SamplePairs generate_sample_pairs(unsigned samples, std::uint64_t seed,
                                  const Rational& range_bound);
RecoveryResult approx_derivation_recover_with_pairs(const BlackBoxFunc& f, unsigned n,
                                                    unsigned depth, const SamplePairs& pairs,
                                                    std::uint64_t seed,
                                                    const Rational& range_bound);

}  // namespace derivkit
