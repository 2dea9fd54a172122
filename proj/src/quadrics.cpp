#include "diagforge/quadrics.hpp"

#include "diagforge/rfpoly.hpp"

#include <stdexcept>

namespace diagforge {

namespace {

RatFunc quad_form(const std::vector<Vals>& M, const Vals& u, const Vals& v) {
    RatFunc s;
    for (size_t i = 0; i < M.size(); ++i)
        for (size_t j = 0; j < M.size(); ++j) s = s + u[i] * M[i][j] * v[j];
    return s;
}

bool proportional(const Vals& a, const Vals& b) {
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = i + 1; j < a.size(); ++j)
            if (!(a[i] * b[j] - a[j] * b[i]).is_zero()) return false;
    return true;
}

// coefficients of a polynomial expression in one named variable
rfpoly::P coefficients_in(const RatFunc& f, const std::string& var, int maxdeg) {
    if (f.den().degree_in(var) > 0)
        throw std::domain_error("expected a polynomial in " + var);
    rfpoly::P out;
    for (int i = 0; i <= maxdeg; ++i)
        out.push_back(RatFunc(f.num().coeff_of(var, i), f.den()));
    rfpoly::trim(out);
    return out;
}

}  // namespace

QuadricFibration::QuadricFibration(QuadricIntersection qi, Vals base)
    : qi_(std::move(qi)), base_(std::move(base)) {
    if (qi_.Qa.size() != 4 || qi_.Qb.size() != 4 || base_.size() != 4)
        throw std::invalid_argument("QuadricFibration: need 4x4 forms and 4 coordinates");
    require_on_intersection(base_);

    for (int j = 0; j < 4 && j_ < 0; ++j) {
        bool a_missing = true, b_square_only = true;
        for (int k = 0; k < 4; ++k) {
            if (!qi_.Qa[j][k].is_zero()) a_missing = false;
            if (k != j && !qi_.Qb[j][k].is_zero()) b_square_only = false;
        }
        if (a_missing && b_square_only && !qi_.Qb[j][j].is_zero()) j_ = j;
    }
    if (j_ < 0)
        throw std::domain_error("QuadricFibration: no coordinate is absent from one quadric and squared in the other");
    for (int k = 0; k < 4; ++k)
        if (k != j_) others_.push_back(k);
    csq_ = qi_.Qb[j_][j_];

    std::vector<Vals> M(3, Vals(3));
    std::vector<Vals> S3(3, Vals(3));
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            M[r][c] = qi_.Qa[others_[r]][others_[c]];
            S3[r][c] = qi_.Qb[others_[r]][others_[c]];
        }
    Vals p3(3);
    for (int r = 0; r < 3; ++r) p3[r] = base_[others_[r]];
    bool p3_zero = true;
    for (const auto& v : p3)
        if (!v.is_zero()) p3_zero = false;
    if (p3_zero) throw std::domain_error("QuadricFibration: base point projects to zero");

    cp_ = parametrize_conic(M, p3);
    if (cp_.base_param[1].is_zero()) {
        // base parameter at infinity: swap the homogeneous parameters
        std::map<std::string, RatFunc> swap{{"pa", RatFunc::variable("pb")},
                                            {"pb", RatFunc::variable("pa")}};
        for (auto& f : cp_.forms) f = substitute(f, swap);
        std::swap(cp_.inverse_rows[0], cp_.inverse_rows[1]);
        std::swap(cp_.base_param[0], cp_.base_param[1]);
    }
    m0_ = cp_.base_param[0] / cp_.base_param[1];

    // on the intersection: csq * v_j^2 = -S3(others), so with w = csq * v_j
    // and others = phi(m, 1): w^2 = -csq * S3(phi(m, 1)) =: G(m)
    std::map<std::string, RatFunc> at_m{{"pa", RatFunc::variable("pm")}, {"pb", RatFunc(1)}};
    Vals phim(3);
    for (int r = 0; r < 3; ++r) phim[r] = substitute(cp_.forms[r], at_m);
    RatFunc G = -csq_ * quad_form(S3, phim, phim);
    rfpoly::P g = coefficients_in(G, "pm", 4);
    g.resize(5);
    rfpoly::P gs = rfpoly::shift(g, m0_);
    gs.resize(5);

    Vals phi0 = conic_point(m0_);
    RatFunc sigma;
    bool found = false;
    for (int r = 0; r < 3 && !found; ++r)
        if (!p3[r].is_zero() && !phi0[r].is_zero()) {
            sigma = phi0[r] / p3[r];
            found = true;
        }
    if (!found) throw std::domain_error("QuadricFibration: parametrization degenerates at the base point");
    RatFunc w0 = csq_ * sigma * base_[j_];
    if (w0.is_zero())
        throw std::domain_error("QuadricFibration: base point is a ramification point of the fibration");
    if (w0 * w0 != gs[0])
        throw std::domain_error("QuadricFibration: internal consistency check failed");

    fc_ = quartic_to_weierstrass({gs[4], gs[3], gs[2], gs[1], -w0});
}

Vals QuadricFibration::conic_point(const RatFunc& m) const {
    std::map<std::string, RatFunc> at{{"pa", m}, {"pb", RatFunc(1)}};
    Vals out(3);
    for (int r = 0; r < 3; ++r) out[r] = substitute(cp_.forms[r], at);
    return out;
}

void QuadricFibration::require_on_intersection(const Vals& point) const {
    if (point.size() != 4) throw std::invalid_argument("expected 4 coordinates");
    if (!quad_form(qi_.Qa, point, point).is_zero() || !quad_form(qi_.Qb, point, point).is_zero())
        throw std::domain_error("point is not on the quadric intersection");
}

ECPoint QuadricFibration::base_image() const {
    // base sits at (u, v) = (0, -q), the conjugate special point
    return fc_->to_curve(fc_->map.special_forward.front().first);
}

ECPoint QuadricFibration::to_curve(const Vals& point) const {
    require_on_intersection(point);
    Vals p3v(3);
    for (int r = 0; r < 3; ++r) p3v[r] = point[others_[r]];

    RatFunc m;
    if (proportional(p3v, cp_.base_point)) {
        m = m0_;
    } else {
        RatFunc A, B;
        for (int r = 0; r < 3; ++r) {
            A = A + cp_.inverse_rows[0][r] * p3v[r];
            B = B + cp_.inverse_rows[1][r] * p3v[r];
        }
        if (B.is_zero()) throw IndeterminateError("fiber point at parameter infinity");
        m = A / B;
    }
    Vals phim = conic_point(m);
    RatFunc sigma;
    bool found = false;
    for (int r = 0; r < 3 && !found; ++r)
        if (!p3v[r].is_zero() && !phim[r].is_zero()) {
            sigma = phim[r] / p3v[r];
            found = true;
        }
    if (!found) throw IndeterminateError("parametrization degenerates at this fiber point");
    RatFunc w = csq_ * sigma * point[j_];
    return fc_->to_curve({m - m0_, w});
}

Vals QuadricFibration::from_curve(const ECPoint& P) const {
    Vals uv = fc_->from_curve(P);
    RatFunc m = uv[0] + m0_;
    Vals phim = conic_point(m);
    Vals out(4);
    for (int r = 0; r < 3; ++r) out[others_[r]] = phim[r];
    out[j_] = uv[1] / csq_;
    require_on_intersection(out);
    return out;
}

}  // namespace diagforge
