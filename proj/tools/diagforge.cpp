// Command-line front end: family enumeration and point generation, identity
// auditing, exact point checking, height-bounded search, and the sixth-power
// chain, all with JSON-lines output (integers serialized as decimal strings).

#include <CLI11.hpp>
#include <json.hpp>

#include "diagforge/families.hpp"
#include "diagforge/fixtures.hpp"
#include "diagforge/search.hpp"

#include <fstream>
#include <iostream>

using namespace diagforge;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0, kRejected = 1, kUsage = 2;

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

std::array<Rat, 4> parse_rat4(const std::string& s, const char* what) {
    auto parts = split(s, ',');
    if (parts.size() != 4) throw std::invalid_argument(std::string(what) + ": need 4 values");
    std::array<Rat, 4> out;
    for (int i = 0; i < 4; ++i) out[i] = parse_rat(parts[i]);
    return out;
}

std::array<int, 4> parse_exps(const std::string& s) {
    auto r = parse_rat4(s, "exponents");
    std::array<int, 4> out;
    for (int i = 0; i < 4; ++i) {
        if (r[i].get_den() != 1 || r[i] < 2 || r[i] > 6)
            throw std::invalid_argument("exponents: integers in 2..6 required");
        out[i] = (int)r[i].get_num().get_si();
    }
    return out;
}

ProjPoint parse_point(const std::string& s) {
    auto parts = split(s, ',');
    if (parts.size() != 4) throw std::invalid_argument("point: need 4 integers");
    ProjPoint p;
    for (int i = 0; i < 4; ++i) {
        Rat r = parse_rat(parts[i]);
        if (r.get_den() != 1) throw std::invalid_argument("point: integers required");
        p.c[i] = r.get_num();
    }
    return p;
}

Json point_json(const ProjPoint& p) {
    Json a = Json::array();
    for (const auto& c : p.c) a.push_back(c.get_str());
    return a;
}

Json surface_json(const DiagonalSurface& s) {
    Json coeffs = Json::array(), exps = Json::array();
    for (const auto& c : s.coeffs) coeffs.push_back(rat_str(c));
    for (int e : s.exps) exps.push_back(e);
    return Json{{"coefficients", coeffs}, {"exponents", exps}};
}

// Output sink: --out FILE or stdout.
struct Sink {
    std::ofstream file;
    std::ostream* out = &std::cout;
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file.open(path);
            if (!file) throw std::runtime_error("cannot open output file: " + path);
            out = &file;
        }
    }
    void line(const Json& j) { *out << j.dump() << "\n"; }
};

int cmd_verify_identities(const std::string& id) {
    auto fixtures = load_fixture_dir(default_fixture_dir());
    std::vector<std::string> only;
    if (!id.empty()) {
        bool known = false;
        for (const auto& f : fixtures) known = known || f.id == id;
        if (!known) {
            std::cerr << "unknown fixture id: " << id << "\n";
            return kUsage;
        }
        only.push_back(id);
    }
    auto reports = run_identity_suite(fixtures, only);
    bool all = true;
    for (const auto& r : reports) {
        if (r.pass)
            std::cout << "PASS " << r.id << "\n";
        else
            std::cout << "FAIL " << r.id << ": " << r.detail << "\n";
        all = all && r.pass;
    }
    return all ? kOk : kRejected;
}

int cmd_gen(const std::string& family, const std::vector<std::string>& params,
            const std::string& multiples, const std::string& out_path) {
    std::map<std::string, Rat> pmap;
    for (const auto& kv : params) {
        auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("--param expects name=value: " + kv);
        pmap[kv.substr(0, eq)] = parse_rat(kv.substr(eq + 1));
    }
    long lo, hi;
    auto dots = multiples.find("..");
    if (dots == std::string::npos) {
        lo = hi = std::stol(multiples);
    } else {
        lo = std::stol(multiples.substr(0, dots));
        hi = std::stol(multiples.substr(dots + 2));
    }
    if (lo > hi || (lo <= 0 && hi >= 0))
        throw std::invalid_argument("--multiples: need a nonzero range A..B with A <= B");

    SurfaceInstance inst = instantiate(family, pmap);
    Json params_json = Json::object();
    for (const auto& [k, v] : pmap) params_json[k] = rat_str(v);

    std::vector<long> ms;
    for (long m = lo; m <= hi; ++m) ms.push_back(m);
    Sink sink(out_path);
    for (const auto& gp : inst.generate_points(ms)) {
        Json rec{{"family", family}, {"params", params_json}, {"m", gp.m}};
        if (gp.indeterminate) {
            rec["indeterminate"] = true;
        } else {
            CheckResult cr = check_point(inst.surface(), gp.point);
            if (!cr.accepted) {
                std::cerr << "internal error: generated point failed verification at m="
                          << gp.m << "\n";
                return kRejected;
            }
            rec["point"] = point_json(gp.point);
            rec["surface"] = surface_json(inst.surface());
            rec["verified"] = true;
        }
        sink.line(rec);
    }
    return kOk;
}

int cmd_check(const std::string& surface, const std::string& exps, const std::string& point) {
    DiagonalSurface s(parse_rat4(surface, "surface"), parse_exps(exps));
    CheckResult r = check_point(s, parse_point(point));
    if (r.accepted) return kOk;
    std::cout << rat_str(r.value) << "\n";
    if (!r.reason.empty()) std::cerr << r.reason << "\n";
    return kRejected;
}

int cmd_search(const std::string& surface, const std::string& exps, long height, int threads,
               const std::string& out_path) {
    if (height <= 0) throw std::invalid_argument("--height must be positive");
    if (threads <= 0) throw std::invalid_argument("--threads must be positive");
    DiagonalSurface s(parse_rat4(surface, "surface"), parse_exps(exps));
    SearchResult r = brute_search(s, height, threads);
    Sink sink(out_path);
    for (const auto& p : r.points)
        sink.line(Json{{"point", point_json(p)}, {"height", p.height().get_str()}});
    return kOk;
}

int cmd_chain(const std::string& t0_str, long length, const std::string& out_path) {
    if (length < 0) throw std::invalid_argument("--length must be nonnegative");
    Rat t0 = parse_rat(t0_str);
    Rat K = rat_pow(t0, 4) + 6 * rat_pow(t0, 3) + 3 * t0 * t0 + 2 * t0 - 1;
    if (K == 0) throw std::invalid_argument("degenerate t0: quartic value vanishes");
    auto members = sixth_power_chain(t0, length);
    Rat shared = rat_pow(K, 3);
    Sink sink(out_path);
    sink.line(Json{{"t0", rat_str(t0)},
                   {"quartic_value", rat_str(K)},
                   {"shared_value", rat_str(shared)},
                   {"relation", "2*X^6 - 2*Y^6 + Z^6 = shared_value * W^6"}});
    long k = 0;
    for (const auto& p : members) {
        Rat lhs = 2 * rat_pow(Rat(p.c[0]), 6) - 2 * rat_pow(Rat(p.c[1]), 6) +
                  rat_pow(Rat(p.c[2]), 6);
        if (lhs != shared * rat_pow(Rat(p.c[3]), 6)) {
            std::cerr << "internal error: chain member failed verification\n";
            return kRejected;
        }
        sink.line(Json{{"k", ++k}, {"point", point_json(p)}, {"verified", true}});
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact rational points on diagonal quartic and sextic surfaces"};
    app.require_subcommand(1);

    std::string id, family, multiples, out_path, surface, exps, point, t0;
    std::vector<std::string> params;
    long height = 0, length = 0;
    int threads = 1;

    auto* vi = app.add_subcommand("verify-identities", "run the identity fixture suite");
    vi->add_option("--id", id, "run a single fixture");

    auto* gen = app.add_subcommand("gen", "generate points from a family");
    gen->add_option("--family", family)->required();
    gen->add_option("--param", params, "parameter assignment name=value");
    gen->add_option("--multiples", multiples, "range of multiples A..B")->required();
    gen->add_option("--out", out_path);

    auto* chk = app.add_subcommand("check", "check one point on a surface");
    chk->add_option("--surface", surface, "a,b,c,d")->required();
    chk->add_option("--exponents", exps, "e1,e2,e3,e4")->required();
    chk->add_option("--point", point, "x,y,z,w")->required();

    auto* srch = app.add_subcommand("search", "exhaustive height-bounded scan");
    srch->add_option("--surface", surface, "a,b,c,d")->required();
    srch->add_option("--exponents", exps, "e1,e2,e3,e4")->required();
    srch->add_option("--height", height)->required();
    srch->add_option("--threads", threads);
    srch->add_option("--out", out_path);

    auto* chain = app.add_subcommand("chain", "sixth-power chain members");
    chain->add_option("--t0", t0)->required();
    chain->add_option("--length", length)->required();
    chain->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (vi->parsed()) return cmd_verify_identities(id);
        if (gen->parsed()) return cmd_gen(family, params, multiples, out_path);
        if (chk->parsed()) return cmd_check(surface, exps, point);
        if (srch->parsed()) return cmd_search(surface, exps, height, threads, out_path);
        if (chain->parsed()) return cmd_chain(t0, length, out_path);
    } catch (const UnknownFamilyError& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const InadmissibleParameterError& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const std::domain_error& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kRejected;
    }
    return kUsage;
}
