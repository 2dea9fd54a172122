#include "diagforge/surface.hpp"

#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace diagforge {

namespace {

Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

// distinct prime divisors: trial division then Brent's rho with Miller-Rabin
void factor_into(const Int& n, std::set<Int>& out) {
    Int m = n;
    if (m <= 1) return;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
        if (m % p == 0) {
            out.insert(Int(p));
            while (m % p == 0) m /= p;
        }
    }
    Int d = 17;
    while (d * d <= m && d < 100000) {
        if (m % d == 0) {
            out.insert(d);
            while (m % d == 0) m /= d;
        }
        d += 2;
    }
    if (m == 1) return;
    if (d * d > m || mpz_probab_prime_p(m.get_mpz_t(), 30)) {
        out.insert(m);
        return;
    }
    // Brent's cycle-finding rho; deterministic parameter sweep
    for (long c = 1;; ++c) {
        Int x = 2, y = 2, g = 1;
        while (g == 1) {
            x = (x * x + c) % m;
            y = (y * y + c) % m;
            y = (y * y + c) % m;
            g = gcd(abs_int(x - y), m);
        }
        if (g != m) {
            factor_into(g, out);
            factor_into(Int(m / g), out);
            return;
        }
    }
}

}  // namespace

DiagonalSurface::DiagonalSurface(std::array<Rat, 4> c, std::array<int, 4> e, std::string n)
    : coeffs(std::move(c)), exps(e), note(std::move(n)) {
    for (const auto& v : coeffs)
        if (v == 0) throw std::domain_error("DiagonalSurface: zero coefficient");
    for (int x : exps)
        if (x < 2) throw std::domain_error("DiagonalSurface: exponent < 2");
}

Rat DiagonalSurface::eval(const std::array<Rat, 4>& p) const {
    Rat s = 0;
    for (int i = 0; i < 4; ++i) s += coeffs[i] * rat_pow(p[i], exps[i]);
    return s;
}

bool DiagonalSurface::product_is_square() const {
    return is_square(coeffs[0] * coeffs[1] * coeffs[2] * coeffs[3]);
}

std::array<int, 4> DiagonalSurface::weights() const {
    int l = std::lcm(std::lcm(exps[0], exps[1]), std::lcm(exps[2], exps[3]));
    return {l / exps[0], l / exps[1], l / exps[2], l / exps[3]};
}

MPoly DiagonalSurface::poly(const std::vector<std::string>& vars) const {
    if (vars.size() != 4) throw std::invalid_argument("poly: need 4 variable names");
    MPoly s;
    for (int i = 0; i < 4; ++i)
        s = s + MPoly::variable(vars[i]).pow(exps[i]) * FieldElem(coeffs[i]);
    return s;
}

std::string DiagonalSurface::str() const {
    static const char* names[] = {"x", "y", "z", "w"};
    std::ostringstream os;
    for (int i = 0; i < 4; ++i) {
        if (i) os << " + ";
        os << "(" << rat_str(coeffs[i]) << ")*" << names[i] << "^" << exps[i];
    }
    return os.str();
}

int ProjPoint::zero_count() const {
    int n = 0;
    for (const auto& v : c)
        if (v == 0) ++n;
    return n;
}

Int ProjPoint::height() const {
    Int h = 0;
    for (const auto& v : c) h = std::max(h, abs_int(v));
    return h;
}

std::string ProjPoint::str() const {
    std::ostringstream os;
    os << "(" << c[0] << "," << c[1] << "," << c[2] << "," << c[3] << ")";
    return os.str();
}

ProjPoint canonical_point(const std::array<Rat, 4>& coords, const std::array<int, 4>& exps) {
    bool all_zero = true;
    for (const auto& v : coords)
        if (v != 0) all_zero = false;
    if (all_zero) throw std::domain_error("canonical_point: zero tuple");

    int l = std::lcm(std::lcm(exps[0], exps[1]), std::lcm(exps[2], exps[3]));
    std::array<int, 4> w{l / exps[0], l / exps[1], l / exps[2], l / exps[3]};

    Int den = 1;
    for (const auto& v : coords) den = lcm(den, Int(v.get_den()));
    std::array<Int, 4> c;
    for (int i = 0; i < 4; ++i) {
        Rat scaled = coords[i] * Rat(int_pow(den, (unsigned long)w[i]));
        scaled.canonicalize();
        c[i] = Int(scaled.get_num());
    }

    Int g = 0;
    for (const auto& v : c) g = gcd(g, v);
    if (g > 1) {
        std::set<Int> primes;
        factor_into(g, primes);
        for (const Int& p : primes) {
            unsigned long k = ~0ul;
            for (int i = 0; i < 4; ++i) {
                if (c[i] == 0) continue;
                Int rem;
                unsigned long v =
                    mpz_remove(rem.get_mpz_t(), c[i].get_mpz_t(), p.get_mpz_t());
                k = std::min(k, v / (unsigned long)w[i]);
            }
            if (k == 0 || k == ~0ul) continue;
            for (int i = 0; i < 4; ++i)
                if (c[i] != 0) c[i] /= int_pow(p, k * (unsigned long)w[i]);
        }
    }

    for (int i = 0; i < 4; ++i) {
        if (c[i] == 0 || w[i] % 2 == 0) continue;
        if (c[i] < 0)
            for (int j = 0; j < 4; ++j)
                if (w[j] % 2) c[j] = -c[j];
        break;
    }
    return ProjPoint{c};
}

bool same_class(const ProjPoint& a, const ProjPoint& b, const std::array<int, 4>& exps) {
    return class_representative(a, exps) == class_representative(b, exps);
}

ProjPoint class_representative(const ProjPoint& p, const std::array<int, 4>& exps) {
    ProjPoint r = canonical_point(p, exps);
    for (int i = 0; i < 4; ++i)
        if (exps[i] % 2 == 0 && r.c[i] < 0) r.c[i] = -r.c[i];
    // the flips may expose a new canonical sign; renormalize
    return canonical_point(r, exps);
}

}  // namespace diagforge
