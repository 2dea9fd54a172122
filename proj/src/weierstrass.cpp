#include "diagforge/weierstrass.hpp"

#include <stdexcept>

namespace diagforge {

namespace {

std::optional<Rat> rat_const(const RatFunc& f) {
    if (!f.is_constant()) return std::nullopt;
    FieldElem v = f.constant_value();
    if (!v.is_rational()) return std::nullopt;
    return v.rat();
}

bool is_integral(const Rat& v) { return v.get_den() == 1; }

}  // namespace

WeierstrassCurve::WeierstrassCurve(RatFunc A, RatFunc B) : A_(std::move(A)), B_(std::move(B)) {
    if (discriminant().is_zero())
        throw std::domain_error("singular Weierstrass model: 4A^3 + 27B^2 = 0");
}

RatFunc WeierstrassCurve::discriminant() const {
    return RatFunc(-16) * (RatFunc(4) * A_.pow(3) + RatFunc(27) * B_ * B_);
}

bool WeierstrassCurve::contains(const ECPoint& P) const {
    if (P.infinity) return true;
    return P.Y * P.Y == P.X.pow(3) + A_ * P.X + B_;
}

void WeierstrassCurve::require_on_curve(const ECPoint& P) const {
    if (!contains(P)) throw std::domain_error("point is not on the curve");
}

ECPoint ec_neg(const ECPoint& P) {
    if (P.infinity) return P;
    return ECPoint::affine(P.X, -P.Y);
}

ECPoint ec_add(const WeierstrassCurve& E, const ECPoint& P, const ECPoint& Q) {
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    RatFunc m;
    if (P.X == Q.X) {
        if (P.Y == -Q.Y) return ECPoint::at_infinity();
        m = (RatFunc(3) * P.X * P.X + E.A()) / (RatFunc(2) * P.Y);
    } else {
        m = (Q.Y - P.Y) / (Q.X - P.X);
    }
    RatFunc X3 = m * m - P.X - Q.X;
    RatFunc Y3 = m * (P.X - X3) - P.Y;
    return ECPoint::affine(std::move(X3), std::move(Y3));
}

ECPoint ec_mul(const WeierstrassCurve& E, long n, const ECPoint& P) {
    if (n < 0) return ec_mul(E, -n, ec_neg(P));
    ECPoint r = ECPoint::at_infinity(), b = P;
    while (n) {
        if (n & 1) r = ec_add(E, r, b);
        if (n >>= 1) b = ec_add(E, b, b);
    }
    return r;
}

std::pair<WeierstrassCurve, BirationalMap> long_to_short(const LongWeierstrass& E) {
    RatFunc b2 = E.a1 * E.a1 + RatFunc(4) * E.a2;
    RatFunc b4 = RatFunc(2) * E.a4 + E.a1 * E.a3;
    RatFunc b6 = E.a3 * E.a3 + RatFunc(4) * E.a6;
    RatFunc c4 = b2 * b2 - RatFunc(24) * b4;
    RatFunc c6 = -b2.pow(3) + RatFunc(36) * b2 * b4 - RatFunc(216) * b6;
    RatFunc A = -c4 / RatFunc(48), B = -c6 / RatFunc(864);

    RatFunc x = RatFunc::variable("x"), y = RatFunc::variable("y");
    RatFunc X = RatFunc::variable("X"), Y = RatFunc::variable("Y");
    RatFunc back_x = X - b2 / RatFunc(12);
    BirationalMap map;
    map.src_vars = {"x", "y"};
    map.dst_vars = {"X", "Y"};
    map.forward = {x + b2 / RatFunc(12), y + (E.a1 * x + E.a3) / RatFunc(2)};
    map.backward = {back_x, Y - (E.a1 * back_x + E.a3) / RatFunc(2)};
    return {WeierstrassCurve(std::move(A), std::move(B)), std::move(map)};
}

TorsionResult torsion_test(const WeierstrassCurve& E, const ECPoint& P) {
    if (!rat_const(E.A()) || !rat_const(E.B()))
        throw std::domain_error("torsion_test: curve must be defined over Q");
    if (!P.infinity && (!rat_const(P.X) || !rat_const(P.Y)))
        throw std::domain_error("torsion_test: point must have rational coordinates");
    E.require_on_curve(P);
    if (P.infinity) return {true, 1};
    // Mazur: rational torsion has order <= 10 or 12.
    ECPoint Q = ECPoint::at_infinity();
    for (int k = 1; k <= 12; ++k) {
        Q = ec_add(E, Q, P);
        if (k == 11) continue;
        if (Q.infinity) return {true, k};
    }
    return {false, 0};
}

bool lutz_nagell_nontorsion_certificate(const WeierstrassCurve& E, const ECPoint& P) {
    auto A = rat_const(E.A()), B = rat_const(E.B());
    if (!A || !B) throw std::domain_error("lutz_nagell: curve must be defined over Q");
    if (P.infinity) return false;
    auto x1 = rat_const(P.X), y1 = rat_const(P.Y);
    if (!x1 || !y1) throw std::domain_error("lutz_nagell: point must have rational coordinates");
    E.require_on_curve(P);
    // (x,y) -> (d^2 x, d^3 y) lands on the integral model Y^2 = X^3 + d^4 A X + d^6 B;
    // a torsion point has integral coordinates there, and so does its double.
    Rat d(lcm(Int(A->get_den()), Int(B->get_den())));
    if (!is_integral(*x1 * d * d) || !is_integral(*y1 * d * d * d)) return true;
    ECPoint P2 = ec_add(E, P, P);
    if (P2.infinity) return false;
    Rat x2 = rat_const(P2.X).value(), y2 = rat_const(P2.Y).value();
    return !is_integral(x2 * d * d) || !is_integral(y2 * d * d * d);
}

std::optional<RatFunc> iso_scale_sq(const WeierstrassCurve& E1, const WeierstrassCurve& E2) {
    const RatFunc &A1 = E1.A(), &B1 = E1.B(), &A2 = E2.A(), &B2 = E2.B();
    if (A1.is_zero() != A2.is_zero() || B1.is_zero() != B2.is_zero()) return std::nullopt;
    RatFunc l2;
    if (!A1.is_zero() && !B1.is_zero()) {
        l2 = (A1 * B2) / (A2 * B1);
    } else if (!A1.is_zero()) {
        // j = 1728: l^4 = A2/A1
        auto c = rat_const(A2 / A1);
        if (!c) return std::nullopt;
        auto r = exact_root(*c, 2);
        if (!r) return std::nullopt;
        l2 = RatFunc(*r);
    } else {
        // j = 0: l^6 = B2/B1
        auto c = rat_const(B2 / B1);
        if (!c) return std::nullopt;
        auto r = exact_root(*c, 3);
        if (!r) return std::nullopt;
        l2 = RatFunc(*r);
    }
    if (!(l2.pow(2) * A1 == A2) || !(l2.pow(3) * B1 == B2)) return std::nullopt;
    // l itself must be rational
    if (auto c = rat_const(l2); c && !is_square(*c)) return std::nullopt;
    return l2;
}

bool scaled_image_matches(const WeierstrassCurve& E1, const ECPoint& P1,
                          const WeierstrassCurve& E2, const ECPoint& P2) {
    E1.require_on_curve(P1);
    E2.require_on_curve(P2);
    if (P1.infinity || P2.infinity)
        return P1.infinity && P2.infinity && iso_scale_sq(E1, E2).has_value();
    if (P1.X.is_zero() != P2.X.is_zero() || P1.Y.is_zero() != P2.Y.is_zero()) return false;

    auto consistent = [&](const RatFunc& l) {
        return l * l * P1.X == P2.X && l.pow(3) * P1.Y == P2.Y &&
               l.pow(4) * E1.A() == E2.A() && l.pow(6) * E1.B() == E2.B();
    };

    if (!P1.X.is_zero() && !P1.Y.is_zero())
        return consistent((P2.Y * P1.X) / (P1.Y * P2.X));
    if (P1.X.is_zero() && !P1.Y.is_zero()) {
        if (!E1.A().is_zero()) return consistent((E2.A() / E1.A()) * (P1.Y / P2.Y));
        // j = 0: l^3 = Y2/Y1, recover l by an exact cube root
        auto c = rat_const(P2.Y / P1.Y);
        if (!c) return false;
        auto r = exact_root(*c, 3);
        return r && consistent(RatFunc(*r));
    }
    if (!P1.X.is_zero()) {
        // two-torsion (Y = 0): only l^2 = X2/X1 is determined
        auto l2 = iso_scale_sq(E1, E2);
        return l2 && *l2 * P1.X == P2.X;
    }
    // (0,0) on both curves
    return iso_scale_sq(E1, E2).has_value();
}

}  // namespace diagforge
