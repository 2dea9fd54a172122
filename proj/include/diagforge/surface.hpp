#pragma once

// Diagonal surfaces a x^e1 + b y^e2 + c z^e3 + d w^e4 = 0 and canonical
// projective representatives of their rational points.
//
// For mixed exponent signatures the scaling action is weighted: coordinate i
// carries weight lcm(e)/e_i, and canonicalization removes the maximal common
// weighted factor. For equal exponents this reduces to coprime integer
// coordinates. Sign is normalized through lambda = -1 (first nonzero
// odd-weight coordinate positive).

#include "diagforge/mpoly.hpp"
#include "diagforge/rational.hpp"

#include <array>
#include <string>
#include <vector>

namespace diagforge {

struct DiagonalSurface {
    std::array<Rat, 4> coeffs;
    std::array<int, 4> exps;
    std::string note;  // verbatim annotation (e.g. quoted Picard rank); never computed

    DiagonalSurface(std::array<Rat, 4> c, std::array<int, 4> e, std::string n = {});

    Rat eval(const std::array<Rat, 4>& p) const;
    // true iff the product of the four coefficients is a rational square
    // (meaningful for the (4,4,4,4) families)
    bool product_is_square() const;
    std::array<int, 4> weights() const;  // lcm(exps)/exps[i]
    MPoly poly(const std::vector<std::string>& vars) const;
    std::string str() const;
};

struct ProjPoint {
    std::array<Int, 4> c;

    bool operator==(const ProjPoint& o) const { return c == o.c; }
    bool operator<(const ProjPoint& o) const { return c < o.c; }
    int zero_count() const;
    Int height() const;  // max |c_i|
    std::string str() const;
};

// Canonical representative of a rational quadruple under the weighted scaling
// (x_i) -> (lambda^{w_i} x_i). Throws std::domain_error on the zero tuple.
ProjPoint canonical_point(const std::array<Rat, 4>& coords, const std::array<int, 4>& exps);
inline ProjPoint canonical_point(const ProjPoint& p, const std::array<int, 4>& exps) {
    return canonical_point({Rat(p.c[0]), Rat(p.c[1]), Rat(p.c[2]), Rat(p.c[3])}, exps);
}

// Solution-class equality: canonical representatives equal up to sign flips of
// even-exponent coordinates (which preserve the surface equation).
bool same_class(const ProjPoint& a, const ProjPoint& b, const std::array<int, 4>& exps);

// The class representative: canonical, with even-exponent coordinates made
// nonnegative (still an exact solution).
ProjPoint class_representative(const ProjPoint& p, const std::array<int, 4>& exps);

}  // namespace diagforge
