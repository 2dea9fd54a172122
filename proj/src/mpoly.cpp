#include "diagforge/mpoly.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace diagforge {

MPoly MPoly::constant(const FieldElem& c) {
    MPoly p;
    if (!c.is_zero()) p.terms_[{}] = c;
    return p;
}

MPoly MPoly::variable(const std::string& name) {
    MPoly p;
    p.vars_ = {name};
    p.terms_[{1}] = FieldElem(1);
    return p;
}

bool MPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

FieldElem MPoly::constant_value() const {
    if (terms_.empty()) return FieldElem(0);
    if (!is_constant()) throw std::domain_error("MPoly is not constant");
    return terms_.begin()->second;
}

long MPoly::total_degree() const {
    long d = -1;
    for (const auto& [e, c] : terms_) {
        long s = 0;
        for (int x : e) s += x;
        d = std::max(d, s);
    }
    return d;
}

long MPoly::degree_in(const std::string& var) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) return terms_.empty() ? -1 : 0;
    size_t idx = it - vars_.begin();
    long d = terms_.empty() ? -1 : 0;
    for (const auto& [e, c] : terms_) d = std::max(d, (long)e[idx]);
    return d;
}

void MPoly::add_term(const std::vector<int>& exps, const FieldElem& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::vector<std::string> MPoly::merge_vars(const std::vector<std::string>& a,
                                           const std::vector<std::string>& b) {
    std::vector<std::string> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

MPoly MPoly::aligned_to(const std::vector<std::string>& vars) const {
    if (vars == vars_) return *this;
    std::vector<int> pos(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(vars.begin(), vars.end(), vars_[i]);
        if (it == vars.end())
            throw std::invalid_argument("aligned_to: target list missing variable " + vars_[i]);
        pos[i] = static_cast<int>(it - vars.begin());
    }
    MPoly r;
    r.vars_ = vars;
    for (const auto& [e, c] : terms_) {
        std::vector<int> ne(vars.size(), 0);
        for (size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
        r.terms_.emplace(std::move(ne), c);
    }
    return r;
}

MPoly MPoly::compress() const {
    std::vector<bool> used(vars_.size(), false);
    for (const auto& [e, c] : terms_)
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i]) used[i] = true;
    MPoly r;
    for (size_t i = 0; i < vars_.size(); ++i)
        if (used[i]) r.vars_.push_back(vars_[i]);
    for (const auto& [e, c] : terms_) {
        std::vector<int> ne;
        for (size_t i = 0; i < e.size(); ++i)
            if (used[i]) ne.push_back(e[i]);
        r.terms_.emplace(std::move(ne), c);
    }
    return r;
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
    auto vars = merge_vars(vars_, o.vars_);
    MPoly a = aligned_to(vars), b = o.aligned_to(vars);
    for (const auto& [e, c] : b.terms_) a.add_term(e, c);
    return a.compress();
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::operator*(const MPoly& o) const {
    auto vars = merge_vars(vars_, o.vars_);
    MPoly a = aligned_to(vars), b = o.aligned_to(vars);
    MPoly r;
    r.vars_ = vars;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            std::vector<int> e(vars.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r.compress();
}

MPoly MPoly::operator*(const FieldElem& c) const {
    MPoly r;
    if (c.is_zero()) return r;
    r.vars_ = vars_;
    for (const auto& [e, t] : terms_) r.add_term(e, t * c);
    return r.compress();
}

MPoly MPoly::pow(long e) const {
    if (e < 0) throw std::domain_error("MPoly::pow: negative exponent");
    MPoly r = constant(1), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        if (e >>= 1) b = b * b;
    }
    return r;
}

bool MPoly::operator==(const MPoly& o) const {
    MPoly a = compress(), b = o.compress();
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
}

FieldElem MPoly::eval(const std::map<std::string, FieldElem>& assignment) const {
    std::vector<const FieldElem*> vals(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) {
        auto it = assignment.find(vars_[i]);
        if (it == assignment.end())
            throw std::invalid_argument("eval: missing assignment for " + vars_[i]);
        vals[i] = &it->second;
    }
    // power cache per variable
    std::vector<std::vector<FieldElem>> pows(vars_.size(), {FieldElem(1)});
    auto power = [&](size_t i, int e) -> const FieldElem& {
        auto& cache = pows[i];
        while ((int)cache.size() <= e) cache.push_back(cache.back() * *vals[i]);
        return cache[e];
    };
    FieldElem acc(0);
    for (const auto& [e, c] : terms_) {
        FieldElem t = c;
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i]) t = t * power(i, e[i]);
        acc = acc + t;
    }
    return acc;
}

const FieldElem& MPoly::leading_coeff() const {
    if (terms_.empty()) throw std::domain_error("leading_coeff of zero polynomial");
    return terms_.rbegin()->second;
}

MPoly MPoly::coeff_of(const std::string& var, int e) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) {
        if (e == 0) return *this;
        return MPoly();
    }
    size_t idx = it - vars_.begin();
    MPoly r;
    r.vars_ = vars_;
    for (const auto& [exps, c] : terms_) {
        if (exps[idx] != e) continue;
        std::vector<int> ne = exps;
        ne[idx] = 0;
        r.add_term(ne, c);
    }
    return r.compress();
}

MPoly MPoly::derivative(const std::string& var) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) return MPoly();
    size_t idx = it - vars_.begin();
    MPoly r;
    r.vars_ = vars_;
    for (const auto& [exps, c] : terms_) {
        if (exps[idx] == 0) continue;
        std::vector<int> ne = exps;
        ne[idx] -= 1;
        r.add_term(ne, c * FieldElem((long)exps[idx]));
    }
    return r.compress();
}

std::optional<MPoly> MPoly::divide_exact(const MPoly& b) const {
    if (b.is_zero()) throw std::domain_error("divide_exact: zero divisor");
    auto vars = merge_vars(vars_, b.vars_);
    MPoly r = aligned_to(vars), d = b.aligned_to(vars);
    MPoly q;
    q.vars_ = vars;
    const auto& [lt_e, lt_c] = *d.terms_.rbegin();
    while (!r.terms_.empty()) {
        const auto& [re, rc] = *r.terms_.rbegin();
        std::vector<int> qe(vars.size());
        for (size_t i = 0; i < qe.size(); ++i) {
            qe[i] = re[i] - lt_e[i];
            if (qe[i] < 0) return std::nullopt;
        }
        FieldElem qc = rc / lt_c;
        q.add_term(qe, qc);
        // r -= qc * x^qe * d
        for (const auto& [de, dc] : d.terms_) {
            std::vector<int> e(vars.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = qe[i] + de[i];
            r.add_term(e, -(qc * dc));
        }
    }
    return q.compress();
}

std::pair<MPoly, Rat> MPoly::primitive_part() const {
    if (terms_.empty()) return {MPoly(), Rat(1)};
    Int l = 1;
    for (const auto& [e, c] : terms_)
        for (const auto& q : c.coords()) l = lcm(l, Int(q.get_den()));
    Int g = 0;
    for (const auto& [e, c] : terms_)
        for (const auto& q : c.coords()) g = gcd(g, Int(Rat(q * l).get_num()));
    if (g == 0) g = 1;
    Rat f(g, l);
    f.canonicalize();
    MPoly prim = *this * FieldElem(Rat(1) / f);
    return {prim, f};
}

MPoly norm_form(const MPoly& g0, const MPoly& g1, const MPoly& g2,
                const std::vector<Rat>& minpoly_low) {
    if (minpoly_low.size() != 3)
        throw std::invalid_argument("norm_form: minimal polynomial must be a monic cubic");
    const FieldElem c0(minpoly_low[0]), c1(minpoly_low[1]), c2(minpoly_low[2]);
    // columns: alpha * theta^j expressed on basis {1, theta, theta^2}
    auto times_theta = [&](const std::array<MPoly, 3>& v) {
        return std::array<MPoly, 3>{-(v[2] * c0), v[0] - v[2] * c1, v[1] - v[2] * c2};
    };
    std::array<MPoly, 3> a0 = {g0, g1, g2};
    std::array<MPoly, 3> a1 = times_theta(a0);
    std::array<MPoly, 3> a2 = times_theta(a1);
    return a0[0] * (a1[1] * a2[2] - a1[2] * a2[1]) -
           a1[0] * (a0[1] * a2[2] - a0[2] * a2[1]) +
           a2[0] * (a0[1] * a1[2] - a0[2] * a1[1]);
}

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << "(" << it->second.str() << ")";
        for (size_t i = 0; i < it->first.size(); ++i) {
            if (it->first[i] == 0) continue;
            os << "*" << vars_[i];
            if (it->first[i] > 1) os << "^" << it->first[i];
        }
    }
    return os.str();
}

}  // namespace diagforge
