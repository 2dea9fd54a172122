#include "diagforge/field.hpp"

#include "diagforge/upoly.hpp"

#include <sstream>

namespace diagforge {

FieldPtr make_field(const std::string& gen, std::vector<Rat> minpoly_low_coeffs) {
    int d = static_cast<int>(minpoly_low_coeffs.size());
    if (d < 2 || d > 3)
        throw std::invalid_argument("number field degree must be 2 or 3");
    auto f = std::make_shared<NumberField>();
    f->gen = gen;
    f->minpoly = std::move(minpoly_low_coeffs);
    return f;
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->gen == b->gen && a->minpoly == b->minpoly;
}

FieldElem::FieldElem(FieldPtr field, std::vector<Rat> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
    if (!field_) {
        if (coords_.size() != 1)
            throw std::invalid_argument("rational FieldElem needs one coordinate");
        return;
    }
    if (static_cast<int>(coords_.size()) != field_->degree())
        throw std::invalid_argument("coordinate vector has wrong length for field");
}

FieldElem FieldElem::generator(const FieldPtr& field) {
    std::vector<Rat> c(field->degree(), Rat(0));
    c[1] = 1;
    return FieldElem(field, c);
}

bool FieldElem::is_zero() const {
    for (const auto& c : coords_)
        if (c != 0) return false;
    return true;
}

const Rat& FieldElem::rat() const {
    if (field_) {
        for (size_t i = 1; i < coords_.size(); ++i)
            if (coords_[i] != 0)
                throw std::domain_error("FieldElem is not rational");
    }
    return coords_[0];
}

void FieldElem::unify(FieldElem& a, FieldElem& b) {
    if (same_field(a.field_, b.field_)) {
        b.field_ = a.field_;
        return;
    }
    if (a.is_rational()) {
        std::vector<Rat> c(b.field_->degree(), Rat(0));
        c[0] = a.coords_[0];
        a = FieldElem(b.field_, std::move(c));
        return;
    }
    if (b.is_rational()) {
        std::vector<Rat> c(a.field_->degree(), Rat(0));
        c[0] = b.coords_[0];
        b = FieldElem(a.field_, std::move(c));
        return;
    }
    throw std::domain_error("FieldElem arithmetic across distinct number fields");
}

FieldElem FieldElem::operator-() const {
    FieldElem r = *this;
    for (auto& c : r.coords_) c = -c;
    return r;
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    FieldElem a = *this, b = o;
    unify(a, b);
    for (size_t i = 0; i < a.coords_.size(); ++i) a.coords_[i] += b.coords_[i];
    return a;
}

FieldElem FieldElem::operator-(const FieldElem& o) const { return *this + (-o); }

void FieldElem::reduce() {
    if (!field_) return;
    int d = field_->degree();
    // coords_ may temporarily hold a polynomial of degree up to 2d-2
    while (static_cast<int>(coords_.size()) > d) {
        Rat top = coords_.back();
        coords_.pop_back();
        int k = static_cast<int>(coords_.size()) - d;  // x^(d+k) = -sum c_i x^(i+k)
        for (int i = 0; i < d; ++i) coords_[i + k] -= top * field_->minpoly[i];
    }
    coords_.resize(d, Rat(0));
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
    FieldElem a = *this, b = o;
    unify(a, b);
    if (!a.field_) return FieldElem(a.coords_[0] * b.coords_[0]);
    std::vector<Rat> prod(a.coords_.size() + b.coords_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.coords_.size(); ++i)
        for (size_t j = 0; j < b.coords_.size(); ++j)
            prod[i + j] += a.coords_[i] * b.coords_[j];
    FieldElem r(a.field_, std::vector<Rat>(a.field_->degree(), Rat(0)));
    r.coords_ = std::move(prod);
    r.reduce();
    return r;
}

FieldElem FieldElem::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    if (!field_) return FieldElem(Rat(1 / coords_[0]));
    upoly::P f = field_->minpoly;
    f.push_back(Rat(1));
    upoly::P a = coords_;
    upoly::trim(a);
    auto [g, s, t] = upoly::extended_gcd(a, f);
    if (upoly::deg(g) != 0)
        throw std::domain_error("element not invertible (reducible minpoly?)");
    FieldElem r(field_, std::vector<Rat>(field_->degree(), Rat(0)));
    r.coords_ = s;
    r.coords_.resize(std::max<size_t>(r.coords_.size(), field_->degree()), Rat(0));
    r.reduce();
    return r;
}

FieldElem FieldElem::operator/(const FieldElem& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero");
    FieldElem a = *this, b = o;
    unify(a, b);
    if (!a.field_) return FieldElem(Rat(a.coords_[0] / b.coords_[0]));
    return a * b.inverse();
}

FieldElem FieldElem::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElem r(1), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool FieldElem::operator==(const FieldElem& o) const {
    FieldElem a = *this, b = o;
    if (!same_field(a.field_, b.field_) && !a.is_rational() && !b.is_rational())
        return false;
    unify(a, b);
    return a.coords_ == b.coords_;
}

std::string FieldElem::str() const {
    if (!field_) return coords_[0].get_str();
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i] == 0) continue;
        if (!first) os << " + ";
        os << coords_[i].get_str();
        if (i >= 1) os << "*" << field_->gen;
        if (i >= 2) os << "^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace diagforge
