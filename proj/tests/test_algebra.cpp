#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "diagforge/field.hpp"
#include "diagforge/mpoly.hpp"
#include "diagforge/ratfunc.hpp"

#include <random>

using namespace diagforge;

namespace {

std::mt19937 rng(20240817);

Rat random_rat() {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
    Rat r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

MPoly random_poly(const std::vector<std::string>& vars, int max_terms = 4, int max_deg = 3) {
    std::uniform_int_distribution<int> nterms(0, max_terms), dg(0, max_deg);
    MPoly p;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        MPoly t = MPoly::constant(FieldElem(random_rat()));
        for (const auto& v : vars) t = t * MPoly::variable(v).pow(dg(rng));
        p = p + t;
    }
    return p;
}

}  // namespace

TEST_CASE("rational field arithmetic") {
    FieldElem a(Rat(1, 2)), b(Rat(1, 3));
    CHECK((a + b) == FieldElem(Rat(5, 6)));
    CHECK((a * b) == FieldElem(Rat(1, 6)));
    CHECK((a / b) == FieldElem(Rat(3, 2)));
    CHECK_THROWS_AS(a / FieldElem(0), std::domain_error);
}

TEST_CASE("cubic extension: theta^3 = 2") {
    auto K = make_field("theta", {Rat(-2), Rat(0), Rat(0)});  // x^3 - 2
    FieldElem th = FieldElem::generator(K);
    CHECK((th * th * th) == FieldElem(2));
    CHECK((th * th * th * th) == th * FieldElem(2));
    CHECK((FieldElem(1) / th) * th == FieldElem(1));
}

TEST_CASE("quadratic extension: golden ratio") {
    // eps^2 = eps + 1
    auto K = make_field("eps", {Rat(-1), Rat(-1)});
    FieldElem e = FieldElem::generator(K);
    CHECK((e * e) == e + FieldElem(1));
    // eps^-1 = eps - 1
    CHECK(e.inverse() == e - FieldElem(1));
    CHECK_THROWS_AS((void)(e + FieldElem::generator(make_field("theta", {Rat(-2), Rat(0), Rat(0)})) ),
                    std::domain_error);
}

TEST_CASE("poly eval examples") {
    MPoly X = MPoly::variable("X"), Y = MPoly::variable("Y"), Z = MPoly::variable("Z"),
          W = MPoly::variable("W"), u = MPoly::variable("u");
    MPoly s = X.pow(4) + Y.pow(4) - 2 * Z.pow(4) -
              (MPoly::constant(2) + 12 * u.pow(2)) * W.pow(4);
    std::map<std::string, FieldElem> at{{"X", FieldElem(0)}, {"Y", FieldElem(2)},
                                        {"Z", FieldElem(1)}, {"W", FieldElem(-1)},
                                        {"u", FieldElem(1)}};
    CHECK(s.eval(at).is_zero());

    MPoly x = MPoly::variable("x"), y = MPoly::variable("y"), z = MPoly::variable("z"),
          w = MPoly::variable("w");
    MPoly sext = x.pow(6) + y.pow(6) - 36 * z.pow(6) + 2 * w.pow(3);
    std::map<std::string, FieldElem> at2{{"x", FieldElem(37)}, {"y", FieldElem(17)},
                                         {"z", FieldElem(21)}, {"w", FieldElem(629)}};
    CHECK(sext.eval(at2).is_zero());

    // all-zero assignment returns the constant term
    MPoly p = x.pow(2) + MPoly::constant(7);
    std::map<std::string, FieldElem> zero{{"x", FieldElem(0)}};
    CHECK(p.eval(zero) == FieldElem(7));

    CHECK_THROWS_AS(p.eval({}), std::invalid_argument);
}

TEST_CASE("mpoly ring axioms on random triples") {
    std::vector<std::string> vars{"x", "y"};
    for (int i = 0; i < 100; ++i) {
        MPoly a = random_poly(vars), b = random_poly(vars), c = random_poly(vars);
        CHECK((a + b) == (b + a));
        CHECK((a * b) == (b * a));
        CHECK(((a * b) * c) == (a * (b * c)));
        CHECK((a * (b + c)) == (a * b + a * c));
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("exact division") {
    MPoly x = MPoly::variable("x"), y = MPoly::variable("y");
    auto q = (x * x - y * y).divide_exact(x - y);
    REQUIRE(q.has_value());
    CHECK(*q == x + y);
    CHECK_FALSE((x * x + MPoly::constant(1)).divide_exact(x).has_value());
    CHECK_THROWS_AS((void)x.divide_exact(MPoly()), std::domain_error);
    // whenever a quotient is returned, b*q == a
    for (int i = 0; i < 50; ++i) {
        MPoly a = random_poly({"x", "y"}), b = random_poly({"x", "y"});
        if (b.is_zero()) continue;
        auto r = (a * b).divide_exact(b);
        REQUIRE(r.has_value());
        CHECK(*r == a);
    }
}

TEST_CASE("norm form") {
    std::vector<Rat> f{Rat(-2), Rat(0), Rat(0)};  // theta^3 - 2
    MPoly one = MPoly::constant(1), zero;
    CHECK(norm_form(zero, one, zero, f) == MPoly::constant(2));
    CHECK(norm_form(one, zero, zero, f) == one);
    // multiplicativity on random pairs
    auto K = make_field("theta", {Rat(-2), Rat(0), Rat(0)});
    for (int i = 0; i < 100; ++i) {
        MPoly a0 = random_poly({"a"}, 2, 2), a1 = random_poly({"a"}, 2, 2),
              a2 = random_poly({"a"}, 2, 2);
        MPoly b0 = random_poly({"a"}, 2, 2), b1 = random_poly({"a"}, 2, 2),
              b2 = random_poly({"a"}, 2, 2);
        // (a0+a1 th+a2 th^2)(b0+b1 th+b2 th^2) with th^3=2
        MPoly c0 = a0 * b0 + 2 * (a1 * b2 + a2 * b1);
        MPoly c1 = a0 * b1 + a1 * b0 + 2 * a2 * b2;
        MPoly c2 = a0 * b2 + a1 * b1 + a2 * b0;
        CHECK(norm_form(c0, c1, c2, f) == norm_form(a0, a1, a2, f) * norm_form(b0, b1, b2, f));
    }
}

TEST_CASE("ratfunc basics and substitution") {
    RatFunc x = RatFunc::variable("x"), t = RatFunc::variable("t");
    // x with x -> t
    RatFunc s = substitute(MPoly::variable("x"), {{"x", t}});
    CHECK(s == t);
    // canonical: e - e == 0
    for (int i = 0; i < 50; ++i) {
        MPoly a = random_poly({"x", "y"}), b = random_poly({"x", "y"});
        if (b.is_zero()) continue;
        RatFunc f(a, b);
        CHECK((f - f).is_zero());
        CHECK(f * RatFunc(f.den()) == RatFunc(f.num()));
    }
}

TEST_CASE("moebius substitution roundtrip") {
    // t -> (a t + b)/(c t + d), inverse t -> (d t - b)/(-c t + a)
    std::uniform_int_distribution<int> coef(-5, 5);
    for (int i = 0; i < 100; ++i) {
        long a = coef(rng), b = coef(rng), c = coef(rng), d = coef(rng);
        if (a * d - b * c == 0) { --i; continue; }
        MPoly t = MPoly::variable("t");
        RatFunc fwd(a * t + MPoly::constant(b), c * t + MPoly::constant(d));
        RatFunc bwd(d * t - MPoly::constant(b), -c * t + MPoly::constant(a));
        MPoly p = random_poly({"t"}, 3, 3);
        RatFunc once = substitute(p, {{"t", fwd}});
        RatFunc back = substitute(once, {{"t", bwd}});
        CHECK(back == RatFunc(p));
    }
}

TEST_CASE("f12 norm identity shape sanity") {
    // Norm(theta) over a two-variable polynomial ring stays exact
    MPoly a = MPoly::variable("a"), c = MPoly::variable("c");
    std::vector<Rat> f{Rat(-2), Rat(0), Rat(0)};
    MPoly n = norm_form(a, c, MPoly(), f);
    CHECK(n == a.pow(3) + 2 * c.pow(3));
}
