#include "derivkit/stability.hpp"

#include <openssl/sha.h>

#include <string>
#include <utility>
#include <vector>

#include "derivkit/rng.hpp"

namespace derivkit {

namespace {

// First 8 bytes of SHA-256(seed ":" p "/" q), big-endian.
std::uint64_t hash64(std::uint64_t seed, const Rational& x) {
    std::string msg = std::to_string(seed) + ":" + x.get_num().get_str() + "/" +
                      x.get_den().get_str();
    unsigned char digest[SHA256_DIGEST_LENGTH];
    SHA256(reinterpret_cast<const unsigned char*>(msg.data()), msg.size(), digest);
    std::uint64_t u = 0;
    for (int i = 0; i < 8; ++i) u = (u << 8) | digest[i];
    return u;
}

}  // namespace

NoisyFunc make_noisy(const Rational& core_lambda, const Rational& epsilon, std::uint64_t seed) {
    if (epsilon < 0) throw std::invalid_argument("epsilon must be >= 0");
    NoisyFunc out;
    out.epsilon = epsilon;
    out.seed = seed;
    if (epsilon == 0) {
        out.base = [core_lambda](const Rational& x) -> Rational { return core_lambda * x; };
        return out;
    }
    const Rational scale = epsilon / (pow2(64) - 1);
    out.base = [core_lambda, scale, seed](const Rational& x) -> Rational {
        Integer u(static_cast<unsigned long>(hash64(seed, x)));
        return core_lambda * x + scale * Rational(u);
    };
    return out;
}

BlackBoxFunc hyers_stabilize(BlackBoxFunc f, unsigned depth) {
    if (depth < 1) throw std::invalid_argument("depth must be >= 1");
    Rational scale = pow2(depth);
    return [f = std::move(f), scale](const Rational& x) -> Rational { return f(scale * x) / scale; };
}

Rational cauchy_defect(const BlackBoxFunc& f, unsigned samples, std::uint64_t seed,
                       const Rational& range_bound) {
    if (samples < 1) throw std::invalid_argument("samples must be >= 1");
    ValueGen gen(seed);
    Rational worst(0);
    for (unsigned i = 0; i < samples; ++i) {
        Rational x = gen.rational_in_range(range_bound);
        Rational y = gen.rational_in_range(range_bound);
        Rational d = rational_abs(f(x + y) - f(x) - f(y));
        if (d > worst) worst = d;
    }
    return worst;
}

SamplePairs generate_sample_pairs(unsigned samples, std::uint64_t seed,
                                  const Rational& range_bound) {
    if (samples < 1) throw std::invalid_argument("samples must be >= 1");
    ValueGen gen(seed);
    SamplePairs pairs;
    pairs.reserve(samples);
    for (unsigned i = 0; i < samples; ++i) {
        Rational x = gen.rational_in_range(range_bound);
        Rational y = gen.rational_in_range(range_bound);
        pairs.emplace_back(std::move(x), std::move(y));
    }
    return pairs;
}

RecoveryResult approx_derivation_recover(const BlackBoxFunc& f, unsigned n, unsigned depth,
                                         unsigned samples, std::uint64_t seed,
                                         const Rational& range_bound) {
    return approx_derivation_recover_with_pairs(
        f, n, depth, generate_sample_pairs(samples, seed, range_bound), seed, range_bound);
}

RecoveryResult approx_derivation_recover_with_pairs(const BlackBoxFunc& f, unsigned n,
                                                    unsigned depth, const SamplePairs& pairs,
                                                    std::uint64_t seed,
                                                    const Rational& range_bound) {
    if (depth < 1 || pairs.empty()) throw std::invalid_argument("depth and samples must be >= 1");

    Rational epsilon_hat(0);
    auto note_defect = [&](const Rational& x, const Rational& y) {
        Rational d = rational_abs(f(x + y) - f(x) - f(y));
        if (d > epsilon_hat) epsilon_hat = d;
    };
    for (const auto& [x, y] : pairs) note_defect(x, y);
    // Doubling pairs of every sample point feed the telescoping bound.
    for (const auto& [x, y] : pairs) {
        Rational u = x;
        for (unsigned j = 0; j < depth; ++j) {
            note_defect(u, u);
            u = u * 2;
        }
    }

    BlackBoxFunc a_n = hyers_stabilize(f, depth);
    const Rational scale = pow2(depth);
    RecoveryResult result;
    result.order = n;
    result.lambda = a_n(Rational(1));

    StabilityReport& rep = result.report;
    rep.depth = depth;
    rep.samples = static_cast<unsigned>(pairs.size());
    rep.seed = seed;
    rep.range_bound = range_bound;
    rep.epsilon_hat = epsilon_hat;

    rep.residual_sup = Rational(0);
    bool core_bound_ok = true;
    const Rational core_budget = epsilon_hat + epsilon_hat / scale;
    for (const auto& [x, y] : pairs) {
        Rational r = rational_abs(f(x) - a_n(x));
        if (r > rep.residual_sup) rep.residual_sup = r;
        if (rational_abs(f(x) - result.lambda * x) > core_budget) core_bound_ok = false;
    }

    rep.cauchy_defect_of_aN = Rational(0);
    for (const auto& [x, y] : pairs) {
        Rational d = rational_abs(a_n(x + y) - a_n(x) - a_n(y));
        if (d > rep.cauchy_defect_of_aN) rep.cauchy_defect_of_aN = d;
    }

    rep.pass = (rep.residual_sup <= epsilon_hat) &&
               (rep.cauchy_defect_of_aN <= epsilon_hat / scale) && core_bound_ok;
    return result;
}

}  // namespace derivkit
