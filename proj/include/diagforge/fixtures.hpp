#pragma once

// Identity fixtures: text files asserting that two expressions agree, either
// outright or modulo a polynomial relation among the variables.
//
// File format (line-oriented headers, '#' starts a comment):
//   id: <name>
//   minpoly: <gen> c0 c1 [c2]     # generator with x^d + c_{d-1}x^{d-1}+...+c0
//   relation: <prefix expression>  # optional; must be polynomial
//   lhs: <prefix expression>
//   rhs: <prefix expression>
// Expressions may continue on following lines until the next header.

#include "diagforge/expr.hpp"

#include <optional>
#include <vector>

namespace diagforge {

struct IdentityFixture {
    std::string id;
    FieldPtr field;  // null over the rationals
    std::optional<MPoly> relation;
    RatFunc lhs, rhs;
};

struct VerifyReport {
    std::string id;
    bool pass = false;
    std::string detail;   // witness assignment or failure description
    double seconds = 0.0;
};

IdentityFixture parse_fixture(const std::string& text, const std::string& fallback_id = "");
IdentityFixture load_fixture_file(const std::string& path);
std::vector<IdentityFixture> load_fixture_dir(const std::string& dir);

// DIAGFORGE_FIXTURES env var, else the built-in location.
std::string default_fixture_dir();

// Exact check: lhs - rhs is zero, or its cleared numerator is exactly
// divisible by the relation. On failure a small-integer counterexample is
// searched for and reported when one exists.
VerifyReport check_fixture(const IdentityFixture& f);

// Runs every fixture whose id is in `only` (all when empty); reports sorted by id.
std::vector<VerifyReport> run_identity_suite(const std::vector<IdentityFixture>& fixtures,
                                             const std::vector<std::string>& only = {});

// Negative control: the same fixture with one numerator coefficient bumped.
IdentityFixture perturbed(const IdentityFixture& f);

}  // namespace diagforge
