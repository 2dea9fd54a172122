#pragma once

// Sparse multivariate polynomials over FieldElem. Variable lists are kept
// sorted by name; terms are kept in graded-lexicographic order with no zero
// coefficients, so equal polynomials have equal representations.

#include "diagforge/field.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace diagforge {

struct GrlexLess {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
        long da = 0, db = 0;
        for (int e : a) da += e;
        for (int e : b) db += e;
        if (da != db) return da < db;
        return a < b;  // lexicographic tiebreak
    }
};

class MPoly {
public:
    using TermMap = std::map<std::vector<int>, FieldElem, GrlexLess>;

    MPoly() = default;
    static MPoly constant(const FieldElem& c);
    static MPoly constant(long c) { return constant(FieldElem(c)); }
    static MPoly variable(const std::string& name);

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    FieldElem constant_value() const;  // throws if not constant
    long total_degree() const;         // -1 for zero
    long degree_in(const std::string& var) const;

    MPoly operator-() const;
    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly operator*(const FieldElem& c) const;
    MPoly pow(long e) const;
    bool operator==(const MPoly& o) const;
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    FieldElem eval(const std::map<std::string, FieldElem>& assignment) const;

    // Exact division: returns quotient iff divisor divides exactly.
    std::optional<MPoly> divide_exact(const MPoly& b) const;

    // Drop variables that no longer occur; extend to a larger variable list.
    MPoly compress() const;
    MPoly aligned_to(const std::vector<std::string>& vars) const;

    // Leading coefficient/term under grlex over the (sorted) variable list.
    const FieldElem& leading_coeff() const;

    // Coefficient of var^e, a polynomial in the remaining variables.
    MPoly coeff_of(const std::string& var, int e) const;

    MPoly derivative(const std::string& var) const;

    // Divide out the rational content (returns {primitive, content}); for
    // polynomials with extension coefficients the content is taken over all
    // rational coordinates.
    std::pair<MPoly, Rat> primitive_part() const;

    std::string str() const;

private:
    std::vector<std::string> vars_;  // sorted ascending, no duplicates
    TermMap terms_;

    void add_term(const std::vector<int>& exps, const FieldElem& c);
    static std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                               const std::vector<std::string>& b);
    friend class RatFunc;
};

inline MPoly operator*(const FieldElem& c, const MPoly& p) { return p * c; }

// Norm of g0 + g1*theta + g2*theta^2 from Q(theta) down to Q, for theta with
// monic cubic minimal polynomial x^3 + m[2] x^2 + m[1] x + m[0] (m given
// low-to-high, length 3). Returns the determinant of the multiplication
// matrix, a polynomial over Q.
MPoly norm_form(const MPoly& g0, const MPoly& g1, const MPoly& g2,
                const std::vector<Rat>& minpoly_low);

}  // namespace diagforge
