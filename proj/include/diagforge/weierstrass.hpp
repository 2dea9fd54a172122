#pragma once

// Short Weierstrass curves Y^2 = X^3 + A X + B over Q or Q(params), with the
// chord-tangent group law, scalar multiplication, and the Mazur/Lutz-Nagell
// torsion decision used by the constructions.

#include "diagforge/birational.hpp"
#include "diagforge/ratfunc.hpp"

#include <optional>

namespace diagforge {

struct ECPoint {
    bool infinity = true;
    RatFunc X, Y;

    static ECPoint at_infinity() { return ECPoint{}; }
    static ECPoint affine(RatFunc x, RatFunc y) { return ECPoint{false, std::move(x), std::move(y)}; }
    bool operator==(const ECPoint& o) const {
        if (infinity != o.infinity) return false;
        return infinity || (X == o.X && Y == o.Y);
    }
};

class WeierstrassCurve {
public:
    WeierstrassCurve(RatFunc A, RatFunc B);

    const RatFunc& A() const { return A_; }
    const RatFunc& B() const { return B_; }
    RatFunc discriminant() const;
    bool contains(const ECPoint& P) const;
    void require_on_curve(const ECPoint& P) const;  // throws std::domain_error

private:
    RatFunc A_, B_;
};

// Long form y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
struct LongWeierstrass {
    RatFunc a1, a2, a3, a4, a6;
};

// Completing the square and depressing the cubic; returns the short curve and
// the (x,y) <-> (X,Y) substitution.
std::pair<WeierstrassCurve, BirationalMap> long_to_short(const LongWeierstrass& E);

ECPoint ec_neg(const ECPoint& P);
ECPoint ec_add(const WeierstrassCurve& E, const ECPoint& P, const ECPoint& Q);
ECPoint ec_mul(const WeierstrassCurve& E, long n, const ECPoint& P);

struct TorsionResult {
    bool finite = false;
    int order = 0;  // meaningful when finite
};

// Mazur-bounded torsion decision; requires a curve and point over Q.
TorsionResult torsion_test(const WeierstrassCurve& E, const ECPoint& P);

// Lutz-Nagell corroboration: true when scaling to an integral model exhibits a
// non-integral multiple of P (a certificate that P is non-torsion).
bool lutz_nagell_nontorsion_certificate(const WeierstrassCurve& E, const ECPoint& P);

// A curve model with a birational identification onto a short Weierstrass
// curve: fiber coordinates <-> (X, Y), with the finitely many fiber points
// carried to the point at infinity listed explicitly.
struct FiberedCurve {
    WeierstrassCurve E;
    BirationalMap map;
    std::vector<Vals> to_infinity;

    ECPoint to_curve(const Vals& p) const {
        for (const auto& s : to_infinity)
            if (s == p) return ECPoint::at_infinity();
        Vals v = map.apply(p);
        return ECPoint::affine(v[0], v[1]);
    }
    Vals from_curve(const ECPoint& P) const {
        if (P.infinity) {
            if (to_infinity.empty())
                throw IndeterminateError("no fiber point maps to infinity");
            return to_infinity.front();
        }
        return map.unapply({P.X, P.Y});
    }
};

// lambda^2 for the scaling isomorphism (x,y) -> (l^2 x, l^3 y) carrying E1 to
// E2, when one exists. Short-form curves over Q only admit scalings.
std::optional<RatFunc> iso_scale_sq(const WeierstrassCurve& E1, const WeierstrassCurve& E2);

// True when some scaling isomorphism E1 -> E2 carries P1 to P2.
bool scaled_image_matches(const WeierstrassCurve& E1, const ECPoint& P1,
                          const WeierstrassCurve& E2, const ECPoint& P2);

}  // namespace diagforge
