#include "diagforge/quartic.hpp"

#include <stdexcept>

namespace diagforge {

FiberedCurve quartic_to_weierstrass(const QuarticCurve& C) {
    if (C.q.is_zero()) throw std::domain_error("quartic_to_weierstrass: constant term must be a nonzero square");
    const RatFunc &a = C.a, &b = C.b, &c = C.c, &d = C.d, &q = C.q;
    RatFunc two(2), four(4);

    LongWeierstrass L;
    L.a1 = d / q;
    L.a2 = c - d * d / (four * q * q);
    L.a3 = two * q * b;
    L.a4 = -four * q * q * a;
    L.a6 = L.a2 * L.a4;
    auto [E, ls] = long_to_short(L);

    RatFunc u = RatFunc::variable("u"), v = RatFunc::variable("v");
    RatFunc x = RatFunc::variable("x"), y = RatFunc::variable("y");
    RatFunc X = RatFunc::variable("X"), Y = RatFunc::variable("Y");

    RatFunc fx = (two * q * (v + q) + d * u) / (u * u);
    RatFunc fy = (four * q * q * (v + q) + two * q * (d * u + c * u * u) -
                  d * d * u * u / (two * q)) / (u * u * u);
    std::map<std::string, RatFunc> into_long{{"x", fx}, {"y", fy}};

    RatFunc bu = (four * x * q * q + four * c * q * q - d * d) / (two * y * q);
    RatFunc bv = (x * bu * bu - d * bu - two * q * q) / (two * q);
    std::map<std::string, RatFunc> from_short{{"x", ls.backward[0]}, {"y", ls.backward[1]}};

    BirationalMap m;
    m.src_vars = {"u", "v"};
    m.dst_vars = {"X", "Y"};
    m.forward = {substitute(ls.forward[0], into_long), substitute(ls.forward[1], into_long)};
    m.backward = {substitute(bu, from_short), substitute(bv, from_short)};

    // (0, -q) is a 0/0 point of the raw formulas; its image on the long model
    // is (-a2, -(8 b q^4 - 4 c d q^2 + d^3)/(4 q^3)).
    RatFunc xm = -L.a2;
    RatFunc ym = -(RatFunc(8) * b * q.pow(4) - four * c * d * q * q + d.pow(3)) / (four * q.pow(3));
    Vals conj_img = ls.apply({xm, ym});
    m.special_forward.push_back({{RatFunc(), -q}, conj_img});
    m.special_backward.push_back({conj_img, {RatFunc(), -q}});

    FiberedCurve fc{std::move(E), std::move(m), {{RatFunc(), q}}};
    return fc;
}

}  // namespace diagforge
