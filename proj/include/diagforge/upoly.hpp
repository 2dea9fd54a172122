#pragma once

// Dense univariate polynomials over Q, coefficients low-to-high.
// Support code for number-field inverses, rational-function reduction and
// squarefreeness tests.

#include "diagforge/rational.hpp"

#include <vector>

namespace diagforge::upoly {

using P = std::vector<Rat>;

inline void trim(P& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int deg(const P& p) { return static_cast<int>(p.size()) - 1; }
inline bool is_zero(const P& p) { return p.empty(); }

inline P add(const P& a, const P& b) {
    P r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

inline P neg(const P& a) {
    P r = a;
    for (auto& c : r) c = -c;
    return r;
}

inline P sub(const P& a, const P& b) { return add(a, neg(b)); }

inline P mul(const P& a, const P& b) {
    if (a.empty() || b.empty()) return {};
    P r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

inline P scale(const P& a, const Rat& s) {
    if (s == 0) return {};
    P r = a;
    for (auto& c : r) c *= s;
    return r;
}

// Euclidean division over Q; returns {quotient, remainder}.
inline std::pair<P, P> divrem(const P& a, const P& b) {
    if (b.empty()) throw std::domain_error("upoly: division by zero");
    P r = a, q;
    if (deg(a) >= deg(b)) q.assign(a.size() - b.size() + 1, Rat(0));
    while (!r.empty() && deg(r) >= deg(b)) {
        Rat c = r.back() / b.back();
        int shift = deg(r) - deg(b);
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) r[i + shift] -= c * b[i];
        trim(r);
    }
    return {q, r};
}

inline P derivative(const P& a) {
    P r;
    for (size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * Rat((long)i));
    trim(r);
    return r;
}

inline Rat eval(const P& a, const Rat& x) {
    Rat r = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) r = r * x + *it;
    return r;
}

// Integer content of a Q-polynomial's integer normalization: returns (prim, c)
// with a = c * prim, prim having coprime integer coefficients and positive
// leading coefficient.
inline std::pair<P, Rat> primitive_part(const P& a) {
    if (a.empty()) return {{}, Rat(1)};
    Int l = 1;
    for (const auto& c : a) l = lcm(l, Int(c.get_den()));
    Int g = 0;
    for (const auto& c : a) g = gcd(g, Int(Rat(c * l).get_num()));
    Rat f(g, l);
    f.canonicalize();
    if (a.back() < 0) f = -f;
    P prim(a.size());
    for (size_t i = 0; i < a.size(); ++i) prim[i] = a[i] / f;
    return {prim, f};
}

// Monic gcd via primitive pseudo-remainder sequence (keeps coefficients tame).
inline P gcd(P a, P b) {
    a = primitive_part(a).first;
    b = primitive_part(b).first;
    while (!b.empty()) {
        // pseudo-remainder: lc(b)^(da-db+1) * a mod b stays integral
        Rat l = rat_pow(b.back(), std::max(0, deg(a) - deg(b)) + 1);
        P r = divrem(scale(a, l), b).second;
        a = b;
        b = primitive_part(r).first;
    }
    if (!a.empty() && a.back() != 1) {
        Rat l = a.back();
        for (auto& c : a) c /= l;
    }
    return a;
}

inline bool is_squarefree(const P& a) {
    if (deg(a) <= 1) return !a.empty();
    return deg(gcd(a, derivative(a))) == 0;
}

// Extended gcd over Q: returns (g, s, t) with s*a + t*b = g, g monic.
inline std::tuple<P, P, P> extended_gcd(const P& a, const P& b) {
    P r0 = a, r1 = b;
    P s0 = {Rat(1)}, s1 = {}, t0 = {}, t1 = {Rat(1)};
    while (!r1.empty()) {
        auto [q, r] = divrem(r0, r1);
        P s2 = sub(s0, mul(q, s1)), t2 = sub(t0, mul(q, t1));
        r0 = r1; r1 = r;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    if (!r0.empty() && r0.back() != 1) {
        Rat l = r0.back();
        for (auto& c : r0) c /= l;
        for (auto& c : s0) c /= l;
        for (auto& c : t0) c /= l;
    }
    return {r0, s0, t0};
}

}  // namespace diagforge::upoly
