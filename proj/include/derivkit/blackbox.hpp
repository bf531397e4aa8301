#pragma once

#include <functional>
#include <vector>

#include "derivkit/rational.hpp"

namespace derivkit {

// Opaque exact-valued function on Q. Must be deterministic.
using BlackBoxFunc = std::function<Rational(const Rational&)>;

// Forward difference with span h: x -> f(x+h) - f(x).
BlackBoxFunc difference(const Rational& h, BlackBoxFunc f);

// Superposition Delta_{h1} ... Delta_{hn} f.
BlackBoxFunc difference_chain(const std::vector<Rational>& hs, BlackBoxFunc f);

}  // namespace derivkit
