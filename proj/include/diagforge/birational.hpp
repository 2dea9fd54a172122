#pragma once

// Pair of mutually inverse rational maps between curve models, as explicit
// coordinate functions. Exceptional source points (where the raw formulas
// degenerate to 0/0 but the map extends) are carried as exact point pairs and
// consulted before substitution; anything else that hits a vanishing
// denominator raises IndeterminateError.

#include "diagforge/ratfunc.hpp"

#include <string>
#include <vector>

namespace diagforge {

using Vals = std::vector<RatFunc>;

struct BirationalMap {
    std::vector<std::string> src_vars, dst_vars;
    Vals forward;   // functions of src_vars
    Vals backward;  // functions of dst_vars
    // exact extensions at points where the formulas are 0/0
    std::vector<std::pair<Vals, Vals>> special_forward;
    std::vector<std::pair<Vals, Vals>> special_backward;

    Vals apply(const Vals& src) const { return eval(src_vars, forward, special_forward, src); }
    Vals unapply(const Vals& dst) const { return eval(dst_vars, backward, special_backward, dst); }

private:
    static Vals eval(const std::vector<std::string>& vars, const Vals& comps,
                     const std::vector<std::pair<Vals, Vals>>& special, const Vals& in) {
        for (const auto& [s, img] : special) {
            bool match = s.size() == in.size();
            for (size_t i = 0; match && i < s.size(); ++i) match = s[i] == in[i];
            if (match) return img;
        }
        std::map<std::string, RatFunc> sub;
        for (size_t i = 0; i < vars.size(); ++i) sub[vars[i]] = in[i];
        Vals out;
        out.reserve(comps.size());
        for (const auto& c : comps) out.push_back(substitute(c, sub));
        return out;
    }
};

}  // namespace diagforge
