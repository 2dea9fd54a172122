#pragma once

// Exact scalars: arbitrary-precision rationals, or elements of Q[x]/(f) for a
// monic minimal polynomial f of degree 2 or 3.

#include "diagforge/rational.hpp"

#include <memory>
#include <string>
#include <vector>

namespace diagforge {

struct NumberField {
    std::string gen;              // generator symbol, e.g. "theta"
    std::vector<Rat> minpoly;     // f = x^d + sum_{i<d} minpoly[i] x^i, d in {2,3}
    int degree() const { return static_cast<int>(minpoly.size()); }
};

using FieldPtr = std::shared_ptr<const NumberField>;

FieldPtr make_field(const std::string& gen, std::vector<Rat> minpoly_low_coeffs);
bool same_field(const FieldPtr& a, const FieldPtr& b);

class FieldElem {
public:
    FieldElem() : coords_{Rat(0)} {}
    FieldElem(long v) : coords_{Rat(v)} {}
    FieldElem(const Rat& v) : coords_{v} {}
    FieldElem(FieldPtr field, std::vector<Rat> coords);

    static FieldElem generator(const FieldPtr& field);

    bool is_rational() const { return field_ == nullptr; }
    bool is_zero() const;
    const Rat& rat() const;  // throws unless rational
    const FieldPtr& field() const { return field_; }
    const std::vector<Rat>& coords() const { return coords_; }

    FieldElem operator-() const;
    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;
    FieldElem inverse() const;
    FieldElem pow(long e) const;
    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    std::string str() const;

private:
    FieldPtr field_;            // null: plain rational
    std::vector<Rat> coords_;   // size 1 (rational) or degree(field)

    void reduce();
    static void unify(FieldElem& a, FieldElem& b);
};

}  // namespace diagforge
