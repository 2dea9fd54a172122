#include "diagforge/ratfunc.hpp"

#include "diagforge/upoly.hpp"

#include <algorithm>

namespace diagforge {

namespace {

// Divide every term of p by the monomial x^e (assumed to divide all terms).
MPoly shift_down(const MPoly& p, const std::vector<int>& e) {
    bool any = false;
    for (int x : e) any = any || x > 0;
    if (!any) return p;
    MPoly m = MPoly::constant(1);
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i]) m = m * MPoly::variable(p.vars()[i]).pow(e[i]);
    auto q = p.divide_exact(m);
    return *q;  // caller guarantees divisibility
}

std::vector<int> min_exponents(const MPoly& p, const std::vector<std::string>& vars) {
    std::vector<int> m(vars.size(), -1);
    MPoly a = p.aligned_to(vars);
    for (const auto& [e, c] : a.terms()) {
        for (size_t i = 0; i < vars.size(); ++i)
            m[i] = (m[i] < 0) ? e[i] : std::min(m[i], e[i]);
    }
    for (auto& x : m)
        if (x < 0) x = 0;
    return m;
}

bool all_rational(const MPoly& p) {
    for (const auto& [e, c] : p.terms())
        if (!c.is_rational()) return false;
    return true;
}

upoly::P to_upoly(const MPoly& p) {
    upoly::P out;
    for (const auto& [e, c] : p.terms()) {
        int d = e.empty() ? 0 : e[0];
        if ((int)out.size() <= d) out.resize(d + 1, Rat(0));
        out[d] = c.rat();
    }
    upoly::trim(out);
    return out;
}

MPoly from_upoly(const upoly::P& p, const std::string& var) {
    MPoly x = MPoly::variable(var), r;
    for (size_t i = 0; i < p.size(); ++i)
        r = r + x.pow((long)i) * FieldElem(p[i]);
    return r;
}

}  // namespace

RatFunc::RatFunc(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
    canonicalize();
}

void RatFunc::canonicalize() {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    if (num_.is_zero()) {
        den_ = MPoly::constant(1);
        return;
    }
    num_ = num_.compress();
    den_ = den_.compress();
    // common monomial factor
    std::vector<std::string> vars;
    std::set_union(num_.vars().begin(), num_.vars().end(), den_.vars().begin(),
                   den_.vars().end(), std::back_inserter(vars));
    if (!vars.empty()) {
        auto mn = min_exponents(num_, vars), md = min_exponents(den_, vars);
        std::vector<int> common(vars.size());
        bool any = false;
        for (size_t i = 0; i < vars.size(); ++i) {
            common[i] = std::min(mn[i], md[i]);
            any = any || common[i] > 0;
        }
        if (any) {
            num_ = shift_down(num_.aligned_to(vars), common).compress();
            den_ = shift_down(den_.aligned_to(vars), common).compress();
        }
    }
    // univariate gcd reduction
    vars.clear();
    std::set_union(num_.vars().begin(), num_.vars().end(), den_.vars().begin(),
                   den_.vars().end(), std::back_inserter(vars));
    if (vars.size() == 1 && all_rational(num_) && all_rational(den_)) {
        auto a = to_upoly(num_.aligned_to(vars)), b = to_upoly(den_.aligned_to(vars));
        auto g = upoly::gcd(a, b);
        if (upoly::deg(g) > 0) {
            num_ = from_upoly(upoly::divrem(a, g).first, vars[0]);
            den_ = from_upoly(upoly::divrem(b, g).first, vars[0]);
        }
    }
    // rational content and leading normalization
    auto [np, nc] = num_.primitive_part();
    auto [dp, dc] = den_.primitive_part();
    num_ = np;
    den_ = dp;
    Rat f = nc / dc;
    FieldElem l = den_.leading_coeff();
    num_ = num_ * (FieldElem(f) / l);
    den_ = den_ * (FieldElem(1) / l);
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw std::domain_error("RatFunc: division by zero");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inverse(); }

RatFunc RatFunc::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    return RatFunc(num_.pow(e), den_.pow(e));
}

bool RatFunc::operator==(const RatFunc& o) const {
    return (num_ * o.den_ - o.num_ * den_).is_zero();
}

FieldElem RatFunc::eval(const std::map<std::string, FieldElem>& assignment) const {
    FieldElem d = den_.eval(assignment);
    if (d.is_zero()) throw IndeterminateError("evaluation hits a pole/indeterminate point");
    return num_.eval(assignment) / d;
}

std::string RatFunc::str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

RatFunc substitute(const MPoly& p, const std::map<std::string, RatFunc>& sub) {
    // common-denominator expansion: each substituted variable v_i = n_i/d_i
    const auto& vars = p.vars();
    std::vector<const RatFunc*> repl(vars.size(), nullptr);
    std::vector<long> maxdeg(vars.size(), 0);
    for (size_t i = 0; i < vars.size(); ++i) {
        auto it = sub.find(vars[i]);
        if (it != sub.end()) {
            repl[i] = &it->second;
            maxdeg[i] = p.degree_in(vars[i]);
        }
    }
    MPoly acc;
    for (const auto& [e, c] : p.terms()) {
        MPoly t = MPoly::constant(c);
        for (size_t i = 0; i < vars.size(); ++i) {
            if (repl[i]) {
                if (e[i]) t = t * repl[i]->num().pow(e[i]);
                if (maxdeg[i] - e[i] > 0) t = t * repl[i]->den().pow(maxdeg[i] - e[i]);
            } else if (e[i]) {
                t = t * MPoly::variable(vars[i]).pow(e[i]);
            }
        }
        acc = acc + t;
    }
    MPoly den = MPoly::constant(1);
    for (size_t i = 0; i < vars.size(); ++i)
        if (repl[i] && maxdeg[i] > 0) den = den * repl[i]->den().pow(maxdeg[i]);
    return RatFunc(acc, den);
}

RatFunc substitute(const RatFunc& f, const std::map<std::string, RatFunc>& sub) {
    RatFunc n = substitute(f.num(), sub), d = substitute(f.den(), sub);
    if (d.is_zero())
        throw IndeterminateError("substitution maps denominator to zero");
    return n / d;
}

}  // namespace diagforge
