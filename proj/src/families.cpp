#include "diagforge/families.hpp"

#include "diagforge/cubic.hpp"
#include "diagforge/quadrics.hpp"

#include <algorithm>

namespace diagforge {

namespace {

RatFunc rf(const Rat& v) { return RatFunc(v); }
Rat ratv(const RatFunc& f) { return f.constant_value().rat(); }
Rat pw(const Rat& a, long e) { return rat_pow(a, e); }

std::vector<Vals> zero4() { return std::vector<Vals>(4, Vals(4)); }

// Set the coefficient of v_i v_j in a symmetric quadric matrix.
void put(std::vector<Vals>& M, int i, int j, const Rat& coeff) {
    RatFunc v = rf(i == j ? coeff : coeff / 2);
    M[i][j] = v;
    M[j][i] = v;
}

void need(bool ok, const std::string& param, const std::string& predicate) {
    if (!ok) throw InadmissibleParameterError(param, predicate);
}

Rat arg(const std::map<std::string, Rat>& ps, const char* name) {
    auto it = ps.find(name);
    if (it == ps.end()) throw std::invalid_argument(std::string("missing parameter ") + name);
    return it->second;
}

// g(X) = f(X + T0) for a quartic given by low-to-high coefficients.
std::array<Rat, 5> shift_quartic(const std::array<Rat, 5>& f, const Rat& T0) {
    static const long C[5][5] = {
        {1, 0, 0, 0, 0}, {1, 1, 0, 0, 0}, {1, 2, 1, 0, 0}, {1, 3, 3, 1, 0}, {1, 4, 6, 4, 1}};
    std::array<Rat, 5> g{};
    for (int k = 0; k < 5; ++k) {
        Rat acc = 0;
        for (int j = k; j < 5; ++j) acc += Rat(C[j][k]) * f[j] * pw(T0, j - k);
        g[k] = acc;
    }
    return g;
}

}  // namespace

struct FamilyBuilder {
    using Post4 = std::function<std::array<Rat, 4>(const std::array<Rat, 4>&)>;
    using Post2 = std::function<std::array<Rat, 4>(const Rat&, const Rat&)>;

    // Intersection-of-two-quadrics fiber; the fibration base is the seed, so
    // the conjugate fiber point (the construction's origin) sits at infinity.
    static void quadric(SurfaceInstance& inst, std::vector<Vals> Qa, std::vector<Vals> Qb,
                        const std::array<Rat, 4>& base, Post4 post,
                        const std::optional<std::array<Rat, 4>>& seed = std::nullopt) {
        Vals b(4);
        for (int i = 0; i < 4; ++i) b[i] = rf(base[i]);
        auto fib = std::make_shared<QuadricFibration>(
            QuadricIntersection{std::move(Qa), std::move(Qb)}, std::move(b));
        ECPoint s;
        if (seed) {
            Vals sv(4);
            for (int i = 0; i < 4; ++i) sv[i] = rf((*seed)[i]);
            s = fib->to_curve(sv);
        } else {
            s = fib->base_image();
        }
        inst.curve_ = std::make_shared<const WeierstrassCurve>(fib->curve());
        inst.seed_ = s;
        inst.gen_ = [fib, s, post](long m) {
            Vals v = fib->from_curve(ec_mul(fib->curve(), m, s));
            return post({ratv(v[0]), ratv(v[1]), ratv(v[2]), ratv(v[3])});
        };
    }

    // Quartic fiber v^2 = f(T) with marked point (T0, w0): (T0, w0) becomes
    // the point at infinity and the conjugate (T0, -w0) the seed.
    static void quartic(SurfaceInstance& inst, const std::array<Rat, 5>& f, const Rat& T0,
                        const Rat& w0, Post2 post) {
        auto g = shift_quartic(f, T0);
        if (g[0] != w0 * w0)
            throw std::domain_error("fiber point is not on the quartic model");
        auto fc = std::make_shared<FiberedCurve>(quartic_to_weierstrass(
            QuarticCurve{rf(g[4]), rf(g[3]), rf(g[2]), rf(g[1]), rf(w0)}));
        ECPoint s = fc->to_curve({RatFunc(0), rf(-w0)});
        inst.curve_ = std::make_shared<const WeierstrassCurve>(fc->E);
        inst.seed_ = s;
        inst.gen_ = [fc, s, post, T0](long m) {
            Vals uv = fc->from_curve(ec_mul(fc->E, m, s));
            return post(ratv(uv[0]) + T0, ratv(uv[1]));
        };
    }

    static void formula(SurfaceInstance& inst, std::function<std::array<Rat, 4>(long)> gen) {
        inst.gen_ = std::move(gen);
    }

    static void set_surface(SurfaceInstance& inst, std::array<Rat, 4> coeffs,
                            std::array<int, 4> exps, std::string note) {
        inst.surf_.emplace(std::move(coeffs), exps, std::move(note));
    }
};

namespace {

using Params = std::map<std::string, Rat>;

struct FamilyDef {
    FamilySpec spec;
    std::function<void(const Params&, SurfaceInstance&)> build;
};

// ---- quadric-intersection families --------------------------------------

void build_v1_ex1(const Params& ps, SurfaceInstance& inst) {
    Rat u = arg(ps, "u");
    need(u != -2 && u != -1 && u != Rat(-1, 2) && u != 0 && u != 1, "u",
         "u not in {-2, -1, -1/2, 0, 1}");
    auto Qa = zero4(), Qb = zero4();
    put(Qa, 0, 0, 1), put(Qa, 0, 1, -2), put(Qa, 1, 1, -2 * u), put(Qa, 2, 2, -1);
    put(Qb, 0, 0, 1), put(Qb, 0, 1, 2 * u), put(Qb, 1, 1, -2 * u), put(Qb, 3, 3, -1);
    FamilyBuilder::set_surface(inst, {1 + u, 4 * u * u * (1 + u), -u, -1}, {4, 4, 4, 4},
                               "generic Picard rank 2");
    FamilyBuilder::quadric(inst, Qa, Qb, {1, 0, 1, -1},
                           [](const std::array<Rat, 4>& v) { return v; });
}

void build_v2_ex2(const Params& ps, SurfaceInstance& inst) {
    Rat al = arg(ps, "alpha");
    need(al != 0 && al != 1, "alpha", "alpha not in {0, 1}");
    auto Qa = zero4(), Qb = zero4();
    put(Qa, 0, 0, al), put(Qa, 1, 1, 1 - al), put(Qa, 3, 3, -1);  // misses Z
    put(Qb, 0, 1, 1), put(Qb, 2, 2, -1);                          // Z only squared
    FamilyBuilder::set_surface(inst, {al * al, (1 - al) * (1 - al), 2 * al * (1 - al), -1},
                               {4, 4, 4, 4}, "generic Picard rank 2");
    FamilyBuilder::quadric(inst, Qa, Qb, {1, 1, -1, 1},
                           [](const std::array<Rat, 4>& v) { return v; });
}

void build_sec3(const Rat& P, const Rat& Q, const Rat& t, SurfaceInstance& inst,
                const std::string& note) {
    Rat Dq = P * P + 3 * P * Q + 3 * Q * Q + 4 * Q * (P + 2 * Q) * t + 6 * Q * Q * t * t;
    need(Dq != 0, "t", "P^2+3PQ+3Q^2+4Q(P+2Q)t+6Q^2t^2 != 0");
    need(P + 2 * Q + 3 * Q * t != 0, "t", "t != -(P+2Q)/(3Q) (torsion seed)");
    // coordinates (T, S, V, w)
    auto Qa = zero4(), Qb = zero4();
    put(Qa, 0, 0, 6 * Q * Q), put(Qa, 0, 1, 4 * Q * (P + 2 * Q));
    put(Qa, 1, 1, P * P + 3 * P * Q + 3 * Q * Q), put(Qa, 2, 2, -Dq);
    put(Qb, 1, 2, 1), put(Qb, 3, 3, -1);
    FamilyBuilder::set_surface(inst, {P, Q, -(P + Q), -P * Q * (P + Q) * Dq}, {4, 4, 4, 4},
                               note);
    Rat y1 = (P + Q) / Q, wq = Q;
    FamilyBuilder::quadric(inst, Qa, Qb, {t, 1, 1, -1}, [y1, wq](const std::array<Rat, 4>& v) {
        return std::array<Rat, 4>{v[0], v[0] + y1 * v[1], v[0] + v[1], v[3] / wq};
    });
}

void build_sec3_St(const Params& ps, SurfaceInstance& inst) {
    Rat u = arg(ps, "u");
    need(u != 0, "u", "u != 0");
    build_sec3(1, 1, u - 1, inst, "generic Picard rank 2 (rank 1 before specialization)");
}

void build_sec3_PQ(const Params& ps, SurfaceInstance& inst) {
    Rat P = arg(ps, "P"), Q = arg(ps, "Q"), t = arg(ps, "t");
    need(P != 0, "P", "P != 0");
    need(Q != 0, "Q", "Q != 0");
    need(P + Q != 0, "Q", "P + Q != 0");
    build_sec3(P, Q, t, inst, "generic Picard rank 1");
}

void build_ident0(const Params& ps, SurfaceInstance& inst) {
    Rat a = arg(ps, "a"), b = arg(ps, "b"), c = arg(ps, "c");
    need(a != 0 && b != 0 && c != 0, "a", "a, b, c nonzero");
    need(2 * a * c != b * b, "b", "2ac - b^2 != 0");
    need(b * b != a * c, "b", "b^2 != ac (nondegenerate conic)");
    // coordinates (T, S, U, V), with t = T/S
    auto Qa = zero4(), Qb = zero4();
    put(Qa, 0, 0, b * c), put(Qa, 0, 1, 2 * a * c), put(Qa, 1, 1, a * b), put(Qa, 2, 2, -a * b);
    put(Qb, 0, 0, c), put(Qb, 0, 1, b), put(Qb, 1, 1, a), put(Qb, 3, 3, -a);
    Rat e = 2 * a * c - b * b;
    FamilyBuilder::set_surface(inst, {e * a * a, e * c * c, a * a * b * b, -2 * a * a * a * c},
                               {4, 4, 4, 4}, "generic rank 2");
    FamilyBuilder::quadric(inst, Qa, Qb, {0, 1, 1, -1}, [](const std::array<Rat, 4>& v) {
        return std::array<Rat, 4>{v[1], v[0], v[2], v[3]};
    });
}

void build_ident1(const Params& ps, SurfaceInstance& inst) {
    Rat p = arg(ps, "p"), q = arg(ps, "q"), r = arg(ps, "r");
    Rat M = q * q - 2 * p * r - 2 * q * r + 2 * r * r;
    need(r != 0, "r", "r != 0");
    need(q != 2 * r, "q", "q != 2r");
    need(p - q + r != 0, "p", "p - q + r != 0");
    need(M != 0, "q", "q^2 - 2pr - 2qr + 2r^2 != 0");
    need(4 * p * r != q * q, "q", "q^2 != 4pr (nondegenerate conic)");
    auto Qa = zero4(), Qb = zero4();
    put(Qa, 0, 0, p), put(Qa, 0, 1, q), put(Qa, 1, 1, r), put(Qa, 2, 2, -r);
    put(Qb, 0, 0, -p * q + q * q - 2 * q * r + 2 * r * r), put(Qb, 0, 1, -2 * r * (p - r));
    put(Qb, 1, 1, r * (2 * r - q)), put(Qb, 3, 3, -r * (2 * r - q));
    Rat pr2 = p - q + r;
    FamilyBuilder::set_surface(
        inst,
        {pr2 * pr2 * M, r * r * M, 2 * r * r * r * pr2, -(q - 2 * r) * (q - 2 * r) * r * r},
        {4, 4, 4, 4}, "generic Picard rank 2");
    FamilyBuilder::quadric(inst, Qa, Qb, {0, 1, 1, -1}, [](const std::array<Rat, 4>& v) {
        return std::array<Rat, 4>{v[0], v[0] + v[1], v[2], v[3]};
    });
}

void build_ident2(const Params& ps, SurfaceInstance& inst) {
    Rat r = arg(ps, "r"), s = arg(ps, "s");
    need(r != 0, "r", "r != 0");
    need(s != 0, "s", "s != 0 (nondegenerate conic)");
    need(r != s && r != -s, "s", "r != +-s");
    auto Qa = zero4(), Qb = zero4();
    put(Qa, 0, 0, s), put(Qa, 1, 1, r), put(Qa, 2, 2, -r);
    put(Qb, 0, 0, r), put(Qb, 0, 1, r - s), put(Qb, 1, 1, r), put(Qb, 3, 3, -r);
    FamilyBuilder::set_surface(
        inst, {-(r - s) * (r + s) * (r + s), -r * r * (r - s), -r * r * (r + s), 2 * r * r * r},
        {4, 4, 4, 4}, "generic Picard rank 2");
    FamilyBuilder::quadric(inst, Qa, Qb, {0, 1, 1, -1}, [](const std::array<Rat, 4>& v) {
        return std::array<Rat, 4>{v[0], v[0] + v[1], v[2], v[3]};
    });
}

void build_ident3(const Params& ps, SurfaceInstance& inst) {
    Rat a = arg(ps, "a");
    need(a != 0 && a != 1 && a != Rat(1, 2), "a", "a not in {0, 1/2, 1}");
    auto Qa = zero4(), Qb = zero4();
    put(Qa, 0, 0, 1), put(Qa, 0, 1, 1), put(Qa, 2, 2, -4 * (1 - a));
    put(Qb, 0, 0, 2 * a), put(Qb, 0, 1, 2), put(Qb, 1, 1, 1), put(Qb, 3, 3, -1);
    Rat e = 1 - 2 * a;
    FamilyBuilder::set_surface(inst, {e * e, 1, -2 * (1 - a) * (1 - a) * e, -1}, {4, 4, 4, 4},
                               "generic Picard rank 2");
    FamilyBuilder::quadric(
        inst, Qa, Qb, {0, 1, 0, -1},
        [](const std::array<Rat, 4>& v) {
            return std::array<Rat, 4>{v[0], v[0] + v[1], 2 * v[2], v[3]};
        },
        std::array<Rat, 4>{-2, 2 * a, 1, 2 * a});
}

void build_modsquares(const Params& ps, SurfaceInstance& inst) {
    Rat m = arg(ps, "m");
    need(m != 0 && m != -1 && m != Rat(-1, 2), "m", "m not in {-1, -1/2, 0}");
    auto Qa = zero4(), Qb = zero4();
    put(Qa, 0, 0, -(1 + 2 * m)), put(Qa, 1, 1, 1), put(Qa, 2, 2, -1);
    put(Qb, 0, 0, 1), put(Qb, 0, 1, 2 * (1 + m)), put(Qb, 1, 1, 1), put(Qb, 3, 3, -1);
    FamilyBuilder::set_surface(inst, {4 * m * m * (1 + m), 1 + m, -m, -1}, {4, 4, 4, 4},
                               "coefficient product is m modulo squares");
    FamilyBuilder::quadric(inst, Qa, Qb, {0, 1, 1, -1}, [](const std::array<Rat, 4>& v) {
        return std::array<Rat, 4>{v[0], v[0] + v[1], v[2], v[3]};
    });
}

// ---- quartic-model families ----------------------------------------------

void build_v3_surface1(const Params& ps, SurfaceInstance& inst) {
    Rat p = arg(ps, "p"), q = arg(ps, "q");
    need(p != 0 && q != 0, "p", "p, q nonzero");
    need(p != q && p != -q, "q", "p != +-q");
    Rat p4 = pw(p, 4) + pw(q, 4), s2 = p * p + q * q, n2 = 2 * p * p + 3 * p * q + 2 * q * q;
    Rat den = p * q * n2;
    std::array<Rat, 5> f{-p4 * p4 / den,
                         -2 * (p + q) * (p + q) * (s2 - p * q) * p4 / den,
                         -p4 * (pw(p, 4) + 2 * p * p * p * q + 6 * p * p * q * q +
                                2 * p * q * q * q + pw(q, 4)) /
                             den,
                         -2 * p * q * (p + q) * (p + q) * s2 * (s2 - p * q) / den,
                         -p * p * q * q * s2 * s2 / den};
    Rat T0 = -p4 / (p * q * s2);
    Rat w0 = (p - q) * (p - q) * p4 / (p * q * s2);
    FamilyBuilder::set_surface(inst, {1, 1, -p4 * p4, -p * p * q * q * n2 * n2 * p4},
                               {4, 4, 4, 4}, "generic Picard rank 3");
    FamilyBuilder::quartic(inst, f, T0, w0, [p, q, p4, s2](const Rat& T, const Rat& v) {
        Rat x = p * q * q * s2 * T * T + (p + q) * p4 * T + p * p4;
        Rat y = p * p * q * s2 * T * T + (p + q) * p4 * T + q * p4;
        Rat z = (p - q) * (p - q) * (p + q) * T;
        return std::array<Rat, 4>{x, y, z, v};
    });
}

// Degree-four closure of P x^6 + Q y^6 + R z^6 along the line through a
// rational point of the Fermat-type sextic, specialized to (a,b,c)=(1,1,1).
void build_sextic_third(const Rat& p, const Rat& q, const Rat& t, SurfaceInstance& inst) {
    Rat u = p + q;
    std::array<Rat, 5> C{pw(q, 4) + pw(q, 3) * u + q * q * u * u + q * pw(u, 3) + pw(u, 4),
                         6 * q * (q + u) * (q * q + u * u),
                         15 * q * q * (q * q + q * u + u * u),
                         20 * pw(q, 3) * (q + u),
                         15 * pw(q, 4)};
    Rat pref = p * u / pw(q, 5);
    Rat Gt = 0;
    for (int i = 0; i < 5; ++i) Gt += pref * C[i] * pw(t, i);
    need(Gt != 0, "t", "G(t) != 0");
    std::array<Rat, 5> f;
    for (int i = 0; i < 5; ++i) f[i] = pref * C[i] / Gt;
    FamilyBuilder::set_surface(inst, {p, q, -u, -Gt}, {6, 6, 6, 2}, "");
    Rat y1 = u / q;
    FamilyBuilder::quartic(inst, f, t, 1, [y1](const Rat& T, const Rat& v) {
        return std::array<Rat, 4>{T, T + y1, T + 1, v};
    });
}

void build_sextic_third_PQ(const Params& ps, SurfaceInstance& inst) {
    Rat p = arg(ps, "p"), q = arg(ps, "q"), t = arg(ps, "t");
    need(p != 0, "p", "p != 0");
    need(q != 0, "q", "q != 0");
    need(p + q != 0, "q", "p + q != 0");
    build_sextic_third(p, q, t, inst);
}

void build_sextic_third_11m2(const Params& ps, SurfaceInstance& inst) {
    Rat t = arg(ps, "t");
    build_sextic_third(1, 1, t, inst);
}

void build_sec6_quartsurf(const Params& ps, SurfaceInstance& inst) {
    Rat a = arg(ps, "a"), b = arg(ps, "b"), c = arg(ps, "c"), t0 = arg(ps, "t0");
    Rat e1 = a * a + 2 * a * b + 2 * b * b, e2 = a * a - 2 * a * b + 2 * b * b;
    Rat P = e1 - 2 * c;
    need(P != 0, "c", "a^2 + 2ab + 2b^2 - 2c != 0");
    need(e2 != 0, "a", "a^2 - 2ab + 2b^2 != 0");
    need(c != 0, "c", "c != 0");
    Rat k = 2 * a * b - c;
    std::array<Rat, 5> F{
        4 * (2 * pw(a, 4) * e1 - 2 * pw(a, 3) * (3 * a + 2 * b) * c +
             (5 * a * a - 2 * a * b + 2 * b * b) * c * c - pw(c, 3)),
        -8 * k * (2 * a * a * e1 - 2 * a * (2 * a + b) * c + c * c),
        8 * k * (3 * a * b * e1 - (a * a + 6 * a * b + 2 * b * b) * c + c * c),
        -4 * k * (4 * b * b * e1 - 2 * b * (a + 4 * b) * c + c * c),
        8 * pw(b, 4) * e1 - 8 * pw(b, 3) * (a + 3 * b) * c +
            (a * a - 2 * a * b + 10 * b * b) * c * c - pw(c, 3)};
    Rat Ft0 = 0;
    for (int i = 0; i < 5; ++i) Ft0 += F[i] * pw(t0, i);
    auto w0 = exact_root(Ft0, 2);
    need(w0.has_value() && *w0 != 0, "t0", "F(t0) is a nonzero rational square");
    FamilyBuilder::set_surface(inst, {P, 4 * P, e2 * c * c, -e2}, {4, 4, 4, 4},
                               "generic Picard rank 2");
    FamilyBuilder::quartic(inst, F, t0, *w0, [a, b, c, e1, k](const Rat& T, const Rat& v) {
        Rat g1 = 2 * a * k - 4 * b * k * T + (4 * pw(b, 3) + (a - 2 * b) * c) * T * T;
        Rat g2 = 2 * (pw(a, 3) - (a - b) * c) - 2 * a * k * T + b * k * T * T;
        Rat g3 = 2 * k - 2 * (a * a + 2 * b * b - c) * T + k * T * T;
        return std::array<Rat, 4>{g1, g2, g3, v};
    });
}

void build_sec6_sextsurf_chain(const Params& ps, SurfaceInstance& inst) {
    Rat t0 = arg(ps, "t0");
    std::array<Rat, 5> K{-1, 2, 3, 6, 1};
    Rat Kt = 0;
    for (int i = 0; i < 5; ++i) Kt += K[i] * pw(t0, i);
    need(Kt != 0, "t0", "t0^4 + 6t0^3 + 3t0^2 + 2t0 - 1 != 0");
    std::array<Rat, 5> f;
    for (int i = 0; i < 5; ++i) f[i] = K[i] / Kt;
    FamilyBuilder::set_surface(inst, {2, -2, 1, -pw(Kt, 3)}, {6, 6, 6, 6},
                               "equal-value chain member");
    FamilyBuilder::quartic(inst, f, t0, 1, [](const Rat& T, const Rat& v) {
        return std::array<Rat, 4>{T * T + 2 * T, T * T + 1, T * T - T - 1, -v};
    });
}

// ---- plane-cubic chain ----------------------------------------------------

void build_sextic_w3_chain(const Params& ps, SurfaceInstance& inst) {
    Rat t = arg(ps, "t"), m = arg(ps, "m");
    need(t == 1 && m == 6, "t", "(t, m) = (1, 6) (the documented elliptic instance)");
    MPoly T = MPoly::variable("T"), Z = MPoly::variable("zeta"), S = MPoly::variable("s");
    auto cub = std::make_shared<PlaneCubic>(PlaneCubic{
        (S + T).pow(3) - T.pow(3) - MPoly::constant(6) * Z.pow(3),
        {"T", "zeta", "s"},
        {RatFunc(1), RatFunc(), RatFunc()}});
    Vals G{rf(-37), rf(21), rf(54)};
    FamilyBuilder::set_surface(inst, {1, 1, -36, 2}, {6, 6, 6, 3}, "");
    FamilyBuilder::formula(inst, [cub, G](long k) {
        Vals pk = cubic_mul(*cub, k, G);
        Rat Tv = ratv(pk[0]), zv = ratv(pk[1]), sv = ratv(pk[2]);
        // x, y, z enter to the sixth power: emitted nonnegative as in the table
        return std::array<Rat, 4>{abs(Tv), abs(sv + Tv), abs(zv), -Tv * (sv + Tv)};
    });
}

// ---- closed-form families -------------------------------------------------

void build_carmichael(const Params& ps, SurfaceInstance& inst) {
    Rat a = arg(ps, "a"), c = arg(ps, "c"), d = arg(ps, "d"), s = arg(ps, "s"),
        t = arg(ps, "t");
    need(a != 0 && c != 0 && d != 0, "a", "a, c, d nonzero");
    need(s != 0 && t != 0, "s", "s, t nonzero");
    auto k = exact_root(4 * a * a * c * d, 4);
    need(k.has_value(), "d", "4a^2cd is the fourth power of a rational");
    Rat kk = *k;
    FamilyBuilder::set_surface(inst, {a, -a, c, d}, {4, 4, 4, 4}, "");
    FamilyBuilder::formula(inst, [a, c, s, t, kk](long m) {
        Rat tm = t * m;
        return std::array<Rat, 4>{kk * (8 * a * pw(s, 4) - c * pw(tm, 4)),
                                  kk * (8 * a * pw(s, 4) + c * pw(tm, 4)),
                                  8 * kk * a * pw(s, 3) * tm, 4 * a * c * s * pw(tm, 3)};
    });
}

void build_conic_2k2(const Params& ps, SurfaceInstance& inst) {
    Rat k = arg(ps, "k"), x1 = arg(ps, "x1"), x2 = arg(ps, "x2"), x3 = arg(ps, "x3");
    need(k != 0, "k", "k != 0");
    need(x1 != 0 || x2 != 0 || x3 != 0, "x1", "(x1, x2, x3) nonzero");
    need(x1 * x1 + 3 * x2 * x2 == k * x3 * x3, "x3", "x1^2 + 3 x2^2 = k x3^2");
    std::vector<Vals> M{{rf(1), rf(0), rf(0)}, {rf(0), rf(3), rf(0)}, {rf(0), rf(0), rf(-k)}};
    auto cp = std::make_shared<ConicParam>(parametrize_conic(M, {rf(x1), rf(x2), rf(x3)}));
    FamilyBuilder::set_surface(inst, {1, 1, 1, -2 * k * k}, {4, 4, 4, 4}, "");
    FamilyBuilder::formula(inst, [cp](long m) {
        std::map<std::string, RatFunc> at{{"pa", RatFunc(Rat(m))}, {"pb", RatFunc(1)}};
        Rat f1 = ratv(substitute(cp->forms[0], at));
        Rat f2 = ratv(substitute(cp->forms[1], at));
        Rat f3 = ratv(substitute(cp->forms[2], at));
        return std::array<Rat, 4>{f1 - f2, 2 * f2, f1 + f2, f3};
    });
}

void build_w2_row1(const Params& ps, SurfaceInstance& inst) {
    Rat t = arg(ps, "t");
    need(t != 0, "t", "t != 0");
    FamilyBuilder::set_surface(inst, {t * t, 1, -2 * t, -1}, {6, 6, 6, 2}, "");
    FamilyBuilder::formula(inst, [t](long m) {
        Rat mm(m);
        return std::array<Rat, 4>{mm * mm, 1, mm, t * pw(mm, 6) - 1};
    });
}

void build_w2_row2(const Params& ps, SurfaceInstance& inst) {
    Rat t = arg(ps, "t");
    need(t != 0, "t", "t != 0");
    FamilyBuilder::set_surface(inst, {2 * pw(t, 3), 1, -1, 6 * t}, {6, 6, 6, 2}, "");
    FamilyBuilder::formula(inst, [t](long m) {
        Rat mm(m);
        return std::array<Rat, 4>{2 * mm, 2 * t * mm * mm - 1, 2 * t * mm * mm + 1,
                                  2 * mm * (4 * t * t * pw(mm, 4) + 1)};
    });
}

std::array<Rat, 4> w2_row34_point(long m, bool row3) {
    Rat a(m), b(1);
    Rat x = 6 * a * a - b * b, y = a * (3 * a + 2 * b), z = 6 * a * a + 3 * a * b + b * b;
    Rat w;
    if (row3)
        w = 270 * pw(a, 6) + 540 * pw(a, 5) * b + 360 * pw(a, 4) * b * b +
            144 * pw(a, 3) * pw(b, 3) + 48 * a * a * pw(b, 4) + 12 * a * pw(b, 5) + pw(b, 6);
    else
        w = 108 * pw(a, 6) - 72 * pw(a, 5) * b - 216 * pw(a, 4) * b * b -
            144 * pw(a, 3) * pw(b, 3) - 42 * a * a * pw(b, 4) - 8 * a * pw(b, 5) - pw(b, 6);
    return {x, y, z, w};
}

void build_w2_row3(const Params&, SurfaceInstance& inst) {
    FamilyBuilder::set_surface(inst, {1, -108, -4, 3}, {6, 6, 6, 2},
                               "coefficient product is a square");
    FamilyBuilder::formula(inst, [](long m) { return w2_row34_point(m, true); });
}

void build_w2_row4(const Params&, SurfaceInstance& inst) {
    FamilyBuilder::set_surface(inst, {1, -432, 8, -9}, {6, 6, 6, 2}, "");
    FamilyBuilder::formula(inst, [](long m) { return w2_row34_point(m, false); });
}

// ---- registry --------------------------------------------------------------

std::vector<FamilyDef> make_registry() {
    std::vector<FamilyDef> fams;
    auto add = [&fams](FamilySpec spec, std::function<void(const Params&, SurfaceInstance&)> b) {
        fams.push_back({std::move(spec), std::move(b)});
    };
    add({"v1_ex1", {"u"}, "u not in {-2, -1, -1/2, 0, 1}", {{"u", 3}},
         "generic Picard rank 2"},
        build_v1_ex1);
    add({"v2_ex2", {"alpha"}, "alpha not in {0, 1}", {{"alpha", 3}}, "generic Picard rank 2"},
        build_v2_ex2);
    add({"v3_surface1", {"p", "q"}, "p, q nonzero and p != +-q", {{"p", 1}, {"q", 2}},
         "generic Picard rank 3"},
        build_v3_surface1);
    add({"sec3_St", {"u"}, "u != 0", {{"u", 1}}, "generic Picard rank 2"}, build_sec3_St);
    add({"sec3_PQ_generic",
         {"P", "Q", "t"},
         "P, Q, P+Q nonzero; t != -(P+2Q)/(3Q); discriminant quadratic in t nonzero",
         {{"P", 1}, {"Q", 2}, {"t", 1}},
         "generic Picard rank 1"},
        build_sec3_PQ);
    add({"ident0", {"a", "b", "c"}, "a, b, c nonzero; 2ac != b^2; b^2 != ac",
         {{"a", 1}, {"b", 1}, {"c", 2}}, "generic Picard rank 2"},
        build_ident0);
    add({"ident1_surf1",
         {"p", "q", "r"},
         "r != 0; q != 2r; p-q+r != 0; q^2-2pr-2qr+2r^2 != 0; q^2 != 4pr",
         {{"p", 2}, {"q", 1}, {"r", 1}},
         "generic Picard rank 2"},
        build_ident1);
    add({"ident2_surf2", {"r", "s"}, "r, s nonzero; r != +-s", {{"r", 1}, {"s", 2}},
         "generic Picard rank 2"},
        build_ident2);
    add({"ident3_surf3", {"a"}, "a not in {0, 1/2, 1}", {{"a", 2}}, "generic Picard rank 2"},
        build_ident3);
    add({"modsquares_m", {"m"}, "m not in {-1, -1/2, 0}", {{"m", 2}},
         "coefficient product is m modulo squares"},
        build_modsquares);
    add({"carmichael",
         {"a", "c", "d", "s", "t"},
         "a, c, d, s, t nonzero; 4a^2cd a rational fourth power",
         {{"a", 1}, {"c", 1}, {"d", 4}, {"s", 1}, {"t", 1}},
         ""},
        build_carmichael);
    add({"conic_2k2",
         {"k", "x1", "x2", "x3"},
         "k != 0; x1^2 + 3 x2^2 = k x3^2 with (x1,x2,x3) nonzero",
         {{"k", 4}, {"x1", 1}, {"x2", 1}, {"x3", 1}},
         ""},
        build_conic_2k2);
    add({"sextic_w2_row1", {"t"}, "t != 0", {{"t", 1}}, ""}, build_w2_row1);
    add({"sextic_w2_row2", {"t"}, "t != 0", {{"t", 1}}, ""}, build_w2_row2);
    add({"sextic_w2_row3", {}, "none", {}, "coefficient product is a square"}, build_w2_row3);
    add({"sextic_w2_row4", {}, "none", {}, ""}, build_w2_row4);
    add({"sextic_w3_chain", {"t", "m"}, "(t, m) = (1, 6)", {{"t", 1}, {"m", 6}}, ""},
        build_sextic_w3_chain);
    add({"sextic_third_PQ", {"p", "q", "t"}, "p, q, p+q nonzero; G(t) != 0",
         {{"p", 1}, {"q", 1}, {"t", 0}}, ""},
        build_sextic_third_PQ);
    add({"sextic_third_11m2", {"t"}, "31+90t+105t^2+60t^3+15t^4 != 0", {{"t", 1}}, ""},
        build_sextic_third_11m2);
    add({"sec6_quartsurf",
         {"a", "b", "c", "t0"},
         "a^2+2ab+2b^2-2c != 0; a^2-2ab+2b^2 != 0; c != 0; F(t0) a nonzero square",
         {{"a", 1}, {"b", 1}, {"c", 1}, {"t0", 0}},
         "generic Picard rank 2"},
        build_sec6_quartsurf);
    add({"sec6_sextsurf_chain", {"t0"}, "t0^4+6t0^3+3t0^2+2t0-1 != 0", {{"t0", 1}},
         "equal-value chain"},
        build_sec6_sextsurf_chain);
    return fams;
}

const std::vector<FamilyDef>& registry() {
    static const std::vector<FamilyDef> fams = make_registry();
    return fams;
}

}  // namespace

std::vector<FamilySpec> list_families() {
    std::vector<FamilySpec> out;
    for (const auto& f : registry()) out.push_back(f.spec);
    return out;
}

SurfaceInstance instantiate(const std::string& id, const std::map<std::string, Rat>& params) {
    for (const auto& fam : registry()) {
        if (fam.spec.id != id) continue;
        for (const auto& [key, value] : params) {
            (void)value;
            if (std::find(fam.spec.params.begin(), fam.spec.params.end(), key) ==
                fam.spec.params.end())
                throw std::invalid_argument("family " + id + ": unknown parameter " + key);
        }
        SurfaceInstance inst;
        inst.id_ = id;
        fam.build(params, inst);
        GeneratedPoint seed = inst.point_at(1);
        if (!seed.indeterminate) {
            std::array<Rat, 4> pr{Rat(seed.point.c[0]), Rat(seed.point.c[1]),
                                  Rat(seed.point.c[2]), Rat(seed.point.c[3])};
            if (inst.surface().eval(pr) != 0)
                throw std::domain_error("family " + id + ": seed pullback is not on the surface");
        }
        return inst;
    }
    throw UnknownFamilyError("unknown family: " + id);
}

GeneratedPoint SurfaceInstance::point_at(long m) const {
    if (m == 0) throw std::invalid_argument("multiple must be nonzero");
    GeneratedPoint gp;
    gp.m = m;
    try {
        gp.point = canonical_point(gen_(m), surf_->exps);
    } catch (const IndeterminateError&) {
        gp.indeterminate = true;
    }
    return gp;
}

std::vector<GeneratedPoint> SurfaceInstance::generate_points(std::vector<long> multiples) const {
    std::sort(multiples.begin(), multiples.end());
    std::vector<GeneratedPoint> out;
    out.reserve(multiples.size());
    for (long m : multiples) out.push_back(point_at(m));
    return out;
}

ProjPoint carmichael_solution(const Rat& a, const Rat& c, const Rat& d, const Rat& s,
                              const Rat& t) {
    if (a == 0 || c == 0 || d == 0)
        throw InadmissibleParameterError("a", "a, c, d nonzero");
    auto k = exact_root(4 * a * a * c * d, 4);
    if (!k) throw std::domain_error("4a^2cd must be the fourth power of a rational");
    Rat kk = *k;
    std::array<Rat, 4> p{kk * (8 * a * pw(s, 4) - c * pw(t, 4)),
                         kk * (8 * a * pw(s, 4) + c * pw(t, 4)), 8 * kk * a * pw(s, 3) * t,
                         4 * a * c * s * pw(t, 3)};
    return canonical_point(p, {4, 4, 4, 4});
}

std::array<MPoly, 4> conic_2k2_solution(const Rat& k, const std::array<MPoly, 3>& phi) {
    MPoly resid = phi[0] * phi[0] + phi[1] * phi[1] * FieldElem(Rat(3)) -
                  phi[2] * phi[2] * FieldElem(k);
    if (!resid.is_zero())
        throw std::domain_error("phi does not solve X1^2 + 3 X2^2 = k X3^2");
    return {phi[0] - phi[1], phi[1] * FieldElem(Rat(2)), phi[0] + phi[1], phi[2]};
}

std::vector<ProjPoint> sixth_power_chain(const Rat& t0, long L) {
    if (L < 0) throw std::invalid_argument("chain length must be nonnegative");
    std::vector<ProjPoint> out;
    if (L == 0) return out;
    SurfaceInstance inst = instantiate("sec6_sextsurf_chain", {{"t0", t0}});
    for (long m = 1; m <= L; ++m) {
        GeneratedPoint gp = inst.point_at(m);
        if (!gp.indeterminate) out.push_back(gp.point);
    }
    return out;
}

}  // namespace diagforge
