#pragma once

#include <gmpxx.h>
#include <optional>
#include <stdexcept>
#include <string>

namespace diagforge {

using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat_pow(const Rat& a, long e) {
    if (e < 0) {
        if (a == 0) throw std::domain_error("rat_pow: zero to negative power");
        Rat inv = 1 / a;
        return rat_pow(inv, -e);
    }
    Rat r = 1, b = a;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline Int int_pow(const Int& a, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
    return r;
}

// Exact n-th root of an integer, if it exists (sign-aware; even n requires v >= 0).
inline std::optional<Int> exact_root(const Int& v, unsigned long n) {
    if (n == 0) throw std::domain_error("exact_root: n=0");
    if (v < 0 && n % 2 == 0) return std::nullopt;
    Int a = abs(v), r;
    int exact = mpz_root(r.get_mpz_t(), a.get_mpz_t(), n);
    if (!exact) return std::nullopt;
    if (v < 0) r = -r;
    return r;
}

// Exact n-th root of a rational, if it exists.
inline std::optional<Rat> exact_root(const Rat& v, unsigned long n) {
    auto num = exact_root(Int(v.get_num()), n);
    if (!num) return std::nullopt;
    auto den = exact_root(Int(v.get_den()), n);
    if (!den) return std::nullopt;
    return Rat(*num, *den);
}

inline bool is_square(const Rat& v) { return exact_root(v, 2).has_value(); }

// Parse "p" or "p/q" (decimal) into a rational.
inline Rat parse_rat(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    r.canonicalize();
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

}  // namespace diagforge
