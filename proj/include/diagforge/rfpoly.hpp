#pragma once

// Dense univariate polynomials with RatFunc coefficients (the coefficient
// field for curves over Q(params)). Coefficients low-to-high.

#include "diagforge/ratfunc.hpp"

#include <vector>

namespace diagforge::rfpoly {

using P = std::vector<RatFunc>;

inline void trim(P& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline int deg(const P& p) { return static_cast<int>(p.size()) - 1; }

inline P add(const P& a, const P& b) {
    P r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) r[i] = r[i] + a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = r[i] + b[i];
    trim(r);
    return r;
}

inline P sub(const P& a, const P& b) {
    P nb = b;
    for (auto& c : nb) c = -c;
    return add(a, nb);
}

inline P mul(const P& a, const P& b) {
    if (a.empty() || b.empty()) return {};
    P r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    trim(r);
    return r;
}

inline P scale(const P& a, const RatFunc& s) {
    if (s.is_zero()) return {};
    P r = a;
    for (auto& c : r) c = c * s;
    return r;
}

inline std::pair<P, P> divrem(const P& a, const P& b) {
    if (b.empty()) throw std::domain_error("rfpoly: division by zero");
    P r = a, q;
    if (deg(a) >= deg(b)) q.resize(a.size() - b.size() + 1);
    while (!r.empty() && deg(r) >= deg(b)) {
        RatFunc c = r.back() / b.back();
        int shift = deg(r) - deg(b);
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) r[i + shift] = r[i + shift] - c * b[i];
        trim(r);
    }
    return {q, r};
}

inline P derivative(const P& a) {
    P r;
    for (size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * RatFunc((long)i));
    trim(r);
    return r;
}

inline RatFunc eval(const P& a, const RatFunc& x) {
    RatFunc r;
    for (auto it = a.rbegin(); it != a.rend(); ++it) r = r * x + *it;
    return r;
}

inline P gcd(P a, P b) {
    while (!b.empty()) {
        P r = divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        RatFunc l = a.back();
        for (auto& c : a) c = c / l;
    }
    return a;
}

inline bool is_squarefree(const P& a) {
    if (deg(a) <= 1) return !a.empty();
    return deg(gcd(a, derivative(a))) == 0;
}

// f(x + s)
inline P shift(const P& a, const RatFunc& s) {
    // synthetic Horner: result = (((a_n)(x+s)+a_{n-1})(x+s)+...)
    P r;
    for (auto it = a.rbegin(); it != a.rend(); ++it) {
        r = mul(r, P{s, RatFunc(1)});
        if (r.empty()) r.resize(1);
        r[0] = r[0] + *it;
        trim(r);
    }
    return r;
}

}  // namespace diagforge::rfpoly
