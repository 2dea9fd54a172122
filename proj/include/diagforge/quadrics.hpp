#pragma once

// Genus-1 curves given as the intersection of two quadric surfaces in P^3,
// reduced to a short Weierstrass model through a known rational base point.
//
// Supported shape (covering all models produced here): one quadric omits some
// coordinate v_j entirely, and the other contains v_j only through v_j^2. The
// first then restricts to a conic in the remaining coordinates, which is
// parametrized through the projected base point; substituting into the second
// quadric yields a quartic v^2 = f(u) handled by quartic_to_weierstrass.

#include "diagforge/conic.hpp"
#include "diagforge/quartic.hpp"

namespace diagforge {

struct QuadricIntersection {
    // Two 4x4 symmetric matrices over Q(params).
    std::vector<Vals> Qa, Qb;
};

class QuadricFibration {
public:
    QuadricFibration(QuadricIntersection qi, Vals base);

    const WeierstrassCurve& curve() const { return fc_->E; }

    // Projective fiber point (4 coordinates) to a curve point; scalar
    // multiples of the base go to the image of the base.
    ECPoint to_curve(const Vals& point) const;
    // A representative of the fiber point under a curve point.
    Vals from_curve(const ECPoint& P) const;

    ECPoint base_image() const;

private:
    QuadricIntersection qi_;
    Vals base_;
    int j_ = -1;                 // index of the coordinate missing from Qa
    std::vector<int> others_;    // the remaining three indices
    RatFunc csq_;                // Qb = S(others) + csq * v_j^2
    ConicParam cp_;
    RatFunc m0_;                 // conic parameter of the projected base
    std::optional<FiberedCurve> fc_;

    Vals conic_point(const RatFunc& m) const;
    void require_on_intersection(const Vals& point) const;
};

}  // namespace diagforge
