#include "diagforge/fixtures.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace diagforge {

namespace {

std::string strip_comment(const std::string& line) {
    auto p = line.find('#');
    return p == std::string::npos ? line : line.substr(0, p);
}

}  // namespace

IdentityFixture parse_fixture(const std::string& text, const std::string& fallback_id) {
    static const std::vector<std::string> keys = {"id", "minpoly", "relation", "lhs", "rhs"};
    std::map<std::string, std::string> sections;
    std::string current;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        line = strip_comment(line);
        bool header = false;
        for (const auto& k : keys) {
            auto pos = line.find_first_not_of(" \t");
            if (pos != std::string::npos && line.compare(pos, k.size() + 1, k + ":") == 0) {
                current = k;
                sections[k] += line.substr(pos + k.size() + 1) + "\n";
                header = true;
                break;
            }
        }
        if (!header && !current.empty()) sections[current] += line + "\n";
    }

    IdentityFixture f;
    {
        std::istringstream idin(sections["id"]);
        idin >> f.id;
    }
    if (f.id.empty()) f.id = fallback_id;
    if (sections.count("minpoly")) {
        std::istringstream min(sections["minpoly"]);
        std::string gen, tok;
        min >> gen;
        std::vector<Rat> coeffs;
        while (min >> tok) coeffs.push_back(parse_rat(tok));
        f.field = make_field(gen, coeffs);
    }
    if (sections.count("relation")) {
        RatFunc r = parse_expr(sections["relation"], f.field);
        if (!r.is_polynomial())
            throw ExprError("fixture " + f.id + ": relation must be a polynomial");
        f.relation = r.num();
    }
    if (!sections.count("lhs") || !sections.count("rhs"))
        throw ExprError("fixture " + f.id + ": lhs and rhs are required");
    f.lhs = parse_expr(sections["lhs"], f.field);
    f.rhs = parse_expr(sections["rhs"], f.field);
    return f;
}

IdentityFixture load_fixture_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_fixture(ss.str(), std::filesystem::path(path).stem().string());
}

std::vector<IdentityFixture> load_fixture_dir(const std::string& dir) {
    std::vector<std::string> paths;
    for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".fx")
            paths.push_back(e.path().string());
    std::sort(paths.begin(), paths.end());
    std::vector<IdentityFixture> out;
    for (const auto& p : paths) out.push_back(load_fixture_file(p));
    return out;
}

std::string default_fixture_dir() {
    if (const char* env = std::getenv("DIAGFORGE_FIXTURES")) return env;
    return DIAGFORGE_DEFAULT_FIXTURES;
}

namespace {

std::vector<std::string> all_vars(const IdentityFixture& f) {
    std::vector<std::string> vs;
    auto add = [&](const MPoly& p) {
        for (const auto& v : p.vars())
            if (std::find(vs.begin(), vs.end(), v) == vs.end()) vs.push_back(v);
    };
    add(f.lhs.num());
    add(f.lhs.den());
    add(f.rhs.num());
    add(f.rhs.den());
    if (f.relation) add(*f.relation);
    std::sort(vs.begin(), vs.end());
    return vs;
}

// Odometer over small integer assignments; honors the relation when present.
std::string find_witness(const IdentityFixture& f) {
    static const long values[] = {1, 2, -1, 0, 3, -2, 4, -3, 5, 7};
    const size_t nv = sizeof(values) / sizeof(values[0]);
    std::vector<std::string> vs = all_vars(f);
    if (vs.empty())
        return f.lhs == f.rhs ? "" : "every assignment (sides differ by a constant)";
    std::vector<size_t> idx(vs.size(), 0);
    unsigned long long budget = 400000;
    while (budget--) {
        std::map<std::string, FieldElem> a;
        for (size_t i = 0; i < vs.size(); ++i) a[vs[i]] = FieldElem(values[idx[i]]);
        try {
            if (!f.relation || f.relation->eval(a).is_zero()) {
                if (f.lhs.eval(a) != f.rhs.eval(a)) {
                    std::ostringstream os;
                    for (size_t i = 0; i < vs.size(); ++i)
                        os << (i ? ", " : "") << vs[i] << "=" << values[idx[i]];
                    return os.str();
                }
            }
        } catch (const std::exception&) {
            // pole or zero division at this assignment; skip it
        }
        size_t i = 0;
        while (i < idx.size() && ++idx[i] == nv) idx[i++] = 0;
        if (i == idx.size()) break;
    }
    return "";
}

}  // namespace

VerifyReport check_fixture(const IdentityFixture& f) {
    auto t0 = std::chrono::steady_clock::now();
    VerifyReport rep;
    rep.id = f.id;
    RatFunc diff = f.lhs - f.rhs;
    if (diff.is_zero()) {
        rep.pass = true;
    } else if (f.relation && diff.num().divide_exact(*f.relation)) {
        rep.pass = true;
    } else {
        std::string w = find_witness(f);
        rep.detail = w.empty() ? "sides differ (no small-integer witness found)"
                               : "counterexample at " + w;
    }
    rep.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

std::vector<VerifyReport> run_identity_suite(const std::vector<IdentityFixture>& fixtures,
                                             const std::vector<std::string>& only) {
    std::vector<VerifyReport> out;
    for (const auto& f : fixtures) {
        if (!only.empty() && std::find(only.begin(), only.end(), f.id) == only.end())
            continue;
        out.push_back(check_fixture(f));
    }
    std::sort(out.begin(), out.end(),
              [](const VerifyReport& a, const VerifyReport& b) { return a.id < b.id; });
    return out;
}

IdentityFixture perturbed(const IdentityFixture& f) {
    IdentityFixture g = f;
    g.id = f.id + "_perturbed";
    MPoly bump;
    if (g.lhs.num().is_zero()) {
        bump = MPoly::constant(1);
    } else {
        // bump the leading term's coefficient by 1
        const auto& lead = *g.lhs.num().terms().rbegin();
        MPoly term = MPoly::constant(1);
        for (size_t i = 0; i < g.lhs.num().vars().size(); ++i)
            term = term * MPoly::variable(g.lhs.num().vars()[i]).pow(lead.first[i]);
        bump = term;
    }
    g.lhs = RatFunc(g.lhs.num() + bump, g.lhs.den());
    return g;
}

}  // namespace diagforge
