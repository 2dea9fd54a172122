#pragma once

// Chord-tangent arithmetic directly on a smooth plane cubic F(v0, v1, v2) = 0
// with a chosen rational inflection point as the group identity.

#include "diagforge/ratfunc.hpp"

#include <vector>

namespace diagforge {

using Vals = std::vector<RatFunc>;

struct PlaneCubic {
    MPoly F;                        // homogeneous cubic
    std::vector<std::string> vars;  // its three coordinates, in order
    Vals origin;                    // rational inflection point (group identity)
};

bool cubic_contains(const PlaneCubic& C, const Vals& P);

// Remove rational content from projective coordinates and normalize sign.
Vals cubic_normalize(Vals P);

// Third intersection of the chord through P, Q (tangent when P = Q
// projectively). A flex returns the point itself.
Vals cubic_third_point(const PlaneCubic& C, const Vals& P, const Vals& Q);

// Group law with respect to C.origin: P + Q = third(third(P, Q), origin).
Vals cubic_add(const PlaneCubic& C, const Vals& P, const Vals& Q);
Vals cubic_mul(const PlaneCubic& C, long n, const Vals& P);

}  // namespace diagforge
