#include "derivkit/blackbox.hpp"

namespace derivkit {

BlackBoxFunc difference(const Rational& h, BlackBoxFunc f) {
    return [h, f = std::move(f)](const Rational& x) -> Rational { return f(x + h) - f(x); };
}

BlackBoxFunc difference_chain(const std::vector<Rational>& hs, BlackBoxFunc f) {
    // Delta_{h1...hn} f = Delta_{h1} ... Delta_{hn} f: wrap back to front.
    for (auto it = hs.rbegin(); it != hs.rend(); ++it) {
        f = difference(*it, std::move(f));
    }
    return f;
}

}  // namespace derivkit
