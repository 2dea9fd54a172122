#include "diagforge/cubic.hpp"

#include <stdexcept>

namespace diagforge {

namespace {

bool proportional(const Vals& a, const Vals& b) {
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = i + 1; j < a.size(); ++j)
            if (!(a[i] * b[j] - a[j] * b[i]).is_zero()) return false;
    return true;
}

// coefficient of _mu^i _lam^j in a RatFunc polynomial in those two variables
RatFunc coeff_mu_lam(const RatFunc& f, int i, int j) {
    if (f.den().degree_in("_mu") > 0 || f.den().degree_in("_lam") > 0)
        throw std::domain_error("cubic: nonpolynomial line section");
    return RatFunc(f.num().coeff_of("_mu", i).coeff_of("_lam", j), f.den());
}

RatFunc line_section(const PlaneCubic& C, const Vals& P, const Vals& D) {
    RatFunc mu = RatFunc::variable("_mu"), lam = RatFunc::variable("_lam");
    std::map<std::string, RatFunc> sub;
    for (int k = 0; k < 3; ++k) sub[C.vars[k]] = mu * P[k] + lam * D[k];
    return substitute(MPoly(C.F), sub);
}

Vals combine(const RatFunc& c, const Vals& P, const RatFunc& d, const Vals& Q) {
    Vals r(3);
    for (int k = 0; k < 3; ++k) r[k] = c * P[k] - d * Q[k];
    return r;
}

}  // namespace

bool cubic_contains(const PlaneCubic& C, const Vals& P) {
    std::map<std::string, RatFunc> sub;
    for (int k = 0; k < 3; ++k) sub[C.vars[k]] = P[k];
    return substitute(MPoly(C.F), sub).is_zero();
}

Vals cubic_normalize(Vals P) {
    for (const auto& c : P)
        if (!(c.is_constant() && (c.is_zero() || c.constant_value().is_rational()))) return P;
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& c : P) {
        Rat v = c.is_zero() ? Rat(0) : c.constant_value().rat();
        den_lcm = lcm(den_lcm, Int(v.get_den()));
    }
    for (const auto& c : P) {
        Rat v = c.is_zero() ? Rat(0) : c.constant_value().rat();
        num_gcd = gcd(num_gcd, Int(Rat(v * Rat(den_lcm)).get_num()));
    }
    if (num_gcd == 0) return P;
    Rat f(den_lcm, num_gcd);
    f.canonicalize();
    int first = -1;
    for (size_t k = 0; k < P.size() && first < 0; ++k)
        if (!P[k].is_zero()) first = (int)k;
    if (first >= 0 && P[first].constant_value().rat() * f < 0) f = -f;
    for (auto& c : P) c = c * RatFunc(f);
    return P;
}

Vals cubic_third_point(const PlaneCubic& C, const Vals& P, const Vals& Q) {
    if (P.size() != 3 || Q.size() != 3) throw std::invalid_argument("cubic: need 3 coordinates");
    if (!cubic_contains(C, P) || !cubic_contains(C, Q))
        throw std::domain_error("cubic: point not on the curve");

    if (proportional(P, Q)) {
        // tangent line: direction d with grad F(P) . d = 0, d not through P
        std::map<std::string, RatFunc> at;
        for (int k = 0; k < 3; ++k) at[C.vars[k]] = P[k];
        Vals g(3);
        for (int k = 0; k < 3; ++k) g[k] = substitute(C.F.derivative(C.vars[k]), at);
        if (g[0].is_zero() && g[1].is_zero() && g[2].is_zero())
            throw std::domain_error("cubic: singular point");
        std::vector<Vals> candidates = {{g[1], -g[0], RatFunc()},
                                        {g[2], RatFunc(), -g[0]},
                                        {RatFunc(), g[2], -g[1]}};
        const Vals* d = nullptr;
        for (const auto& cand : candidates) {
            bool zero = cand[0].is_zero() && cand[1].is_zero() && cand[2].is_zero();
            if (!zero && !proportional(cand, P)) {
                d = &cand;
                break;
            }
        }
        if (!d) throw std::domain_error("cubic: no tangent direction");
        RatFunc sec = line_section(C, P, *d);
        RatFunc c12 = coeff_mu_lam(sec, 1, 2), c03 = coeff_mu_lam(sec, 0, 3);
        if (c12.is_zero()) return cubic_normalize(P);  // flex
        return cubic_normalize(combine(c03, P, c12, *d));
    }

    RatFunc sec = line_section(C, P, Q);
    RatFunc c21 = coeff_mu_lam(sec, 2, 1), c12 = coeff_mu_lam(sec, 1, 2);
    if (c21.is_zero() && c12.is_zero())
        throw std::domain_error("cubic: line contained in the curve");
    return cubic_normalize(combine(c12, P, c21, Q));
}

Vals cubic_add(const PlaneCubic& C, const Vals& P, const Vals& Q) {
    return cubic_third_point(C, cubic_third_point(C, P, Q), C.origin);
}

Vals cubic_mul(const PlaneCubic& C, long n, const Vals& P) {
    if (n < 0) return cubic_mul(C, -n, cubic_third_point(C, P, C.origin));
    Vals r = C.origin, b = P;
    // small multiples only; repeated addition keeps this simple
    for (long i = 0; i < n; ++i) r = cubic_add(C, r, b);
    return r;
}

}  // namespace diagforge
