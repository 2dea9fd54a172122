#include "diagforge/conic.hpp"

#include <stdexcept>

namespace diagforge {

namespace {

RatFunc bilinear(const std::vector<Vals>& M, const Vals& u, const Vals& v) {
    RatFunc s;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s = s + u[i] * M[i][j] * v[j];
    return s;
}

RatFunc det3(const std::vector<Vals>& M) {
    return M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
           M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
           M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
}

}  // namespace

ConicParam parametrize_conic(const std::vector<Vals>& M, const Vals& p) {
    if (M.size() != 3 || p.size() != 3) throw std::invalid_argument("parametrize_conic: need 3x3 form and 3 coordinates");
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < i; ++j)
            if (M[i][j] != M[j][i]) throw std::invalid_argument("parametrize_conic: matrix not symmetric");
    if (det3(M).is_zero()) throw std::domain_error("parametrize_conic: degenerate conic");
    if (!bilinear(M, p, p).is_zero()) throw std::domain_error("parametrize_conic: point not on conic");

    int i0 = -1;
    for (int i = 0; i < 3 && i0 < 0; ++i)
        if (!p[i].is_zero()) i0 = i;
    if (i0 < 0) throw std::domain_error("parametrize_conic: zero point");
    int i1 = i0 == 0 ? 1 : 0;
    int i2 = i0 == 2 ? 1 : 2;

    Vals e1(3), e2(3);
    e1[i1] = RatFunc(1);
    e2[i2] = RatFunc(1);

    RatFunc a = RatFunc::variable("pa"), b = RatFunc::variable("pb");
    // second intersection of the line p + t*(a e1 + b e2) with the conic
    RatFunc C = a * a * bilinear(M, e1, e1) + RatFunc(2) * a * b * bilinear(M, e1, e2) +
                b * b * bilinear(M, e2, e2);
    RatFunc B1 = bilinear(M, p, e1), B2 = bilinear(M, p, e2);
    RatFunc Bpd = a * B1 + b * B2;

    ConicParam cp;
    cp.forms.resize(3);
    for (int k = 0; k < 3; ++k) {
        RatFunc dk = (k == i1 ? a : k == i2 ? b : RatFunc());
        cp.forms[k] = C * p[k] - RatFunc(2) * Bpd * dk;
    }
    // q = alpha*p + beta*e1 + gamma*e2 with (beta : gamma) = (pa : pb);
    // beta = q[i1] - (p[i1]/p[i0]) q[i0], gamma likewise.
    cp.inverse_rows.assign(2, Vals(3));
    cp.inverse_rows[0][i1] = RatFunc(1);
    cp.inverse_rows[0][i0] = -(p[i1] / p[i0]);
    cp.inverse_rows[1][i2] = RatFunc(1);
    cp.inverse_rows[1][i0] = -(p[i2] / p[i0]);
    cp.base_param = {B2, -B1};
    if (B1.is_zero() && B2.is_zero())
        throw std::domain_error("parametrize_conic: base point is singular for the form");
    cp.base_point = p;
    return cp;
}

}  // namespace diagforge
