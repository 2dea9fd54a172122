#pragma once

// Quotients of multivariate polynomials. Canonical form: denominator nonzero,
// common monomial factor and rational content removed, denominator leading
// coefficient (grlex) normalized to 1. When numerator and denominator involve
// a single variable with rational coefficients, the fraction is fully reduced
// by univariate gcd; the multivariate case reduces content only.

#include "diagforge/mpoly.hpp"

#include <stdexcept>

namespace diagforge {

// Thrown when a rational map is evaluated on its exceptional locus.
struct IndeterminateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class RatFunc {
public:
    RatFunc() : num_(), den_(MPoly::constant(1)) {}
    RatFunc(long v) : num_(MPoly::constant(v)), den_(MPoly::constant(1)) {}
    RatFunc(const Rat& v) : num_(MPoly::constant(FieldElem(v))), den_(MPoly::constant(1)) {}
    RatFunc(const FieldElem& v) : num_(MPoly::constant(v)), den_(MPoly::constant(1)) {}
    RatFunc(const MPoly& p) : num_(p), den_(MPoly::constant(1)) {}
    RatFunc(MPoly num, MPoly den);

    static RatFunc variable(const std::string& name) { return RatFunc(MPoly::variable(name)); }

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_ == MPoly::constant(1); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    FieldElem constant_value() const { return num_.constant_value() / den_.constant_value(); }

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc inverse() const;
    RatFunc pow(long e) const;

    // Exact value equality (cross multiplication).
    bool operator==(const RatFunc& o) const;
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    FieldElem eval(const std::map<std::string, FieldElem>& assignment) const;

    std::string str() const;

private:
    MPoly num_, den_;
    void canonicalize();
};

// Substitution var -> rational function; unassigned variables stay symbolic.
RatFunc substitute(const MPoly& p, const std::map<std::string, RatFunc>& sub);
RatFunc substitute(const RatFunc& f, const std::map<std::string, RatFunc>& sub);

}  // namespace diagforge
