#pragma once

// Genus-1 quartic models v^2 = a u^4 + b u^3 + c u^2 + d u + q^2, with the
// rational point (0, q), mapped to a short Weierstrass curve.

#include "diagforge/weierstrass.hpp"

namespace diagforge {

struct QuarticCurve {
    RatFunc a, b, c, d, q;  // q != 0; constant term is q^2
};

// Fiber coordinates are (u, v); (0, q) is carried to the point at infinity and
// (0, -q) to an explicit finite point. Throws std::domain_error when the
// resulting cubic model is singular (degenerate quartic).
FiberedCurve quartic_to_weierstrass(const QuarticCurve& C);

}  // namespace diagforge
