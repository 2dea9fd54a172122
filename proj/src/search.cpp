#include "diagforge/search.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>
#include <thread>

namespace diagforge {

CheckResult check_point(const DiagonalSurface& s, const ProjPoint& p) {
    if (p.zero_count() == 4) throw std::domain_error("check_point: zero tuple");
    CheckResult r;
    r.value = s.eval({Rat(p.c[0]), Rat(p.c[1]), Rat(p.c[2]), Rat(p.c[3])});
    if (r.value != 0) {
        r.reason = "surface evaluates to " + rat_str(r.value);
        return r;
    }
    if (p.zero_count() >= 2) {
        r.reason = "trivial point (two or more zero coordinates)";
        return r;
    }
    r.accepted = true;
    return r;
}

namespace {

struct ScanContext {
    std::array<Int, 4> A;  // integer-scaled coefficients
    std::array<int, 4> e;
    long H;
    bool solve_last;                       // last exponent 2 or 3: solve exactly
    std::vector<std::vector<Int>> powers;  // per coordinate 0..2, index v+H
};

void scan_range(const ScanContext& cx, long x_lo, long x_hi, std::set<ProjPoint>& out,
                unsigned long long& scanned) {
    const long H = cx.H;
    for (long x = x_lo; x < x_hi; ++x) {
        for (long y = -H; y <= H; ++y) {
            Int xy = cx.A[0] * cx.powers[0][x + H] + cx.A[1] * cx.powers[1][y + H];
            for (long z = -H; z <= H; ++z) {
                ++scanned;
                Int val = xy + cx.A[2] * cx.powers[2][z + H];
                // A[3] * w^e = -val
                Int target = -val;
                if (target % cx.A[3] != 0) continue;
                auto root = exact_root(Int(target / cx.A[3]), (unsigned long)cx.e[3]);
                if (!root) continue;
                if (!cx.solve_last && abs(*root) > H) continue;
                for (int sgn : {1, -1}) {
                    if (sgn < 0 && (*root == 0 || cx.e[3] % 2)) continue;
                    ProjPoint p{{Int(x), Int(y), Int(z), Int(sgn * *root)}};
                    if (p.zero_count() >= 2 || p.zero_count() == 4) continue;
                    out.insert(class_representative(p, cx.e));
                }
            }
        }
    }
}

}  // namespace

SearchResult brute_search(const DiagonalSurface& s, long H, int threads) {
    if (H < 1) throw std::invalid_argument("brute_search: height bound must be >= 1");
    if (threads < 1) threads = 1;
    auto t0 = std::chrono::steady_clock::now();

    ScanContext cx;
    cx.e = s.exps;
    cx.H = H;
    cx.solve_last = s.exps[3] <= 3;
    Int den = 1;
    for (const auto& c : s.coeffs) den = lcm(den, Int(c.get_den()));
    for (int i = 0; i < 4; ++i) {
        Rat v = s.coeffs[i] * Rat(den);
        v.canonicalize();
        cx.A[i] = Int(v.get_num());
    }
    cx.powers.resize(3);
    for (int i = 0; i < 3; ++i) {
        cx.powers[i].resize(2 * H + 1);
        for (long v = -H; v <= H; ++v)
            cx.powers[i][v + H] = int_pow(Int(v), (unsigned long)s.exps[i]);
    }

    std::vector<std::set<ProjPoint>> found(threads);
    std::vector<unsigned long long> counts(threads, 0);
    std::vector<std::thread> workers;
    long span = (H + 1 + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        long lo = t * span, hi = std::min(H + 1, (t + 1) * span);
        if (lo >= hi) continue;
        workers.emplace_back(
            [&, t, lo, hi] { scan_range(cx, lo, hi, found[t], counts[t]); });
    }
    for (auto& w : workers) w.join();

    SearchResult res{s, H, {}, 0, 0.0};
    std::set<ProjPoint> merged;
    for (int t = 0; t < threads; ++t) {
        merged.insert(found[t].begin(), found[t].end());
        res.scanned += counts[t];
    }
    res.points.assign(merged.begin(), merged.end());
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

CrossValidation cross_validate(const DiagonalSurface& s, const std::vector<ProjPoint>& generated,
                               long H, int threads) {
    SearchResult sr = brute_search(s, H, threads);
    CrossValidation cv;
    std::set<ProjPoint> scan(sr.points.begin(), sr.points.end());
    std::set<ProjPoint> gen;
    bool last_bounded = s.exps[3] > 3;
    for (const auto& p : generated) {
        ProjPoint rep = class_representative(p, s.exps);
        Int h = 0;
        for (int i = 0; i < (last_bounded ? 4 : 3); ++i) h = std::max(h, Int(abs(rep.c[i])));
        if (h > H) continue;
        gen.insert(rep);
        if (!scan.count(rep)) cv.missed.push_back(rep);
    }
    for (const auto& p : sr.points)
        if (!gen.count(p)) cv.ungenerated.push_back(p);
    return cv;
}

}  // namespace diagforge
