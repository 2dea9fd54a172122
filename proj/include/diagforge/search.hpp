#pragma once

// Exhaustive height-bounded solution scan over a diagonal surface, used as an
// independent oracle against generated points, plus exact point checking.

#include "diagforge/surface.hpp"

#include <vector>

namespace diagforge {

struct CheckResult {
    bool accepted = false;
    Rat value;  // exact evaluation when rejected for a nonzero value
    std::string reason;
};

// accepted iff the evaluation is exactly zero and at most one coordinate is
// zero; throws std::domain_error on the zero tuple.
CheckResult check_point(const DiagonalSurface& s, const ProjPoint& p);

struct SearchResult {
    DiagonalSurface surface;
    long height = 0;
    std::vector<ProjPoint> points;  // class representatives, sorted, deduplicated
    unsigned long long scanned = 0;
    double seconds = 0.0;
};

// All nontrivial solution classes with the first three coordinates bounded by
// H in absolute value. When the last exponent is 2 or 3 the last coordinate is
// solved exactly (and is unbounded); otherwise it is root-extracted and kept
// only when within the bound. Output is independent of the thread count.
SearchResult brute_search(const DiagonalSurface& s, long H, int threads = 1);

struct CrossValidation {
    std::vector<ProjPoint> missed;      // generated, height <= H, absent from the scan
    std::vector<ProjPoint> ungenerated; // found by the scan but not in the input
    bool consistent() const { return missed.empty(); }
};

CrossValidation cross_validate(const DiagonalSurface& s, const std::vector<ProjPoint>& generated,
                               long H, int threads = 1);

}  // namespace diagforge
