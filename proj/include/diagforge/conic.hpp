#pragma once

// Rational parametrization of a nondegenerate plane conic through a given
// rational point, by the pencil of lines through that point.

#include "diagforge/ratfunc.hpp"

#include <vector>

namespace diagforge {

using Vals = std::vector<RatFunc>;

struct ConicParam {
    // The parametrized point: three quadratic forms in the homogeneous
    // parameters "pa", "pb".
    Vals forms;
    // Two linear forms in the conic coordinates recovering (pa : pb) for any
    // conic point not proportional to the base point.
    std::vector<Vals> inverse_rows;
    // Parameter value (pa : pb) at which forms() is proportional to the base
    // point (the tangent direction).
    Vals base_param;
    Vals base_point;
};

// M: 3x3 symmetric matrix of the conic v^T M v = 0; p: a rational point on it.
ConicParam parametrize_conic(const std::vector<Vals>& M, const Vals& p);

}  // namespace diagforge
