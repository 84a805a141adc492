#include "residual.hpp"

#include <algorithm>
#include <cmath>

namespace wavelab {

namespace {

void check_series(const FieldPairSeries& s) {
    const size_t n = s.times.size();
    if (n == 0) throw invalid_input("residuals: empty series");
    if (s.zeta.size() != n || s.zeta_t.size() != n || s.u.size() != n || s.u_t.size() != n)
        throw invalid_input("residuals: series fields out of sync with times");
}

Field depth_field(const Field& zeta, double eps, double beta, const Field& b_alpha) {
    const size_t n = zeta.size();
    Field h(n);
    for (size_t i = 0; i < n; ++i) {
        h[i] = 1.0 + eps * zeta[i] - beta * b_alpha[i];
        if (h[i] <= 0.0) throw nonpositive_depth("residuals: h = 1+eps*zeta-beta*b <= 0");
    }
    return h;
}

}  // namespace

ResidualReport gn_residuals(const FieldPairSeries& series, const RegimeParams& theta,
                            const Field& b_alpha, const Spectral& sp,
                            const ResidualOptions& opt) {
    check_series(series);
    if (opt.normalization <= 0.0) throw invalid_input("residuals: normalization must be > 0");
    ResidualReport rep;
    rep.normalization = opt.normalization;
    rep.s = opt.s;
    rep.times = series.times;
    const double eps = theta.eps, mu = theta.mu;

    for (size_t t = 0; t < series.size(); ++t) {
        const Field& zeta = series.zeta[t];
        const Field& u = series.u[t];
        const size_t n = zeta.size();
        const Field h = depth_field(zeta, eps, theta.beta, b_alpha);

        Field r1 = series.zeta_t[t] + sp.derivative(h * u, 1);

        const Field u_x = sp.derivative(u, 1);
        const Field u_xx = sp.derivative(u, 2);
        const Field u_xt = sp.derivative(series.u_t[t], 1);
        const Field zeta_x = sp.derivative(zeta, 1);
        Field inner(n);
        for (size_t i = 0; i < n; ++i)
            inner[i] = h[i] * h[i] * h[i] *
                       (u_xt[i] + eps * (u[i] * u_xx[i] - u_x[i] * u_x[i]));
        const Field inner_x = sp.derivative(inner, 1);
        Field r2(n);
        for (size_t i = 0; i < n; ++i)
            r2[i] = series.u_t[t][i] + zeta_x[i] + eps * u[i] * u_x[i] -
                    mu / (3.0 * h[i]) * inner_x[i];

        for (size_t i = 0; i < n; ++i) {
            r1[i] /= opt.normalization;
            r2[i] /= opt.normalization;
        }
        rep.r1_sup = std::max(rep.r1_sup, sup_norm(r1));
        rep.r2_sup = std::max(rep.r2_sup, sup_norm(r2));
        rep.r1_hs = std::max(rep.r1_hs, sp.hs_norm(r1, opt.s));
        rep.r2_hs = std::max(rep.r2_hs, sp.hs_norm(r2, opt.s));
    }
    return rep;
}

ResidualReport bouss_residuals(const FieldPairSeries& series, const RegimeParams& theta,
                               const WaveSpeedField& speed, const Field& b_alpha,
                               const Spectral& sp, const ResidualOptions& opt) {
    check_series(series);
    if (opt.normalization <= 0.0) throw invalid_input("residuals: normalization must be > 0");
    ResidualReport rep;
    rep.normalization = opt.normalization;
    rep.s = opt.s;
    rep.times = series.times;
    const double eps = theta.eps, mu = theta.mu;

    for (size_t t = 0; t < series.size(); ++t) {
        const Field& zeta = series.zeta[t];
        const Field& u = series.u[t];
        const size_t n = zeta.size();
        const Field h = depth_field(zeta, eps, theta.beta, b_alpha);

        Field r1 = series.zeta_t[t] + sp.derivative(h * u, 1);

        const Field u_x = sp.derivative(u, 1);
        const Field u_xxt = sp.derivative(series.u_t[t], 2);
        const Field zeta_x = sp.derivative(zeta, 1);
        Field r2(n);
        for (size_t i = 0; i < n; ++i) {
            const double c4 = std::pow(speed.c[i], 4);
            r2[i] = series.u_t[t][i] + zeta_x[i] + eps * u[i] * u_x[i] -
                    mu / 3.0 * c4 * u_xxt[i];
        }

        for (size_t i = 0; i < n; ++i) {
            r1[i] /= opt.normalization;
            r2[i] /= opt.normalization;
        }
        rep.r1_sup = std::max(rep.r1_sup, sup_norm(r1));
        rep.r2_sup = std::max(rep.r2_sup, sup_norm(r2));
        rep.r1_hs = std::max(rep.r1_hs, sp.hs_norm(r1, opt.s));
        rep.r2_hs = std::max(rep.r2_hs, sp.hs_norm(r2, opt.s));
    }
    return rep;
}

OrderFit order_fit(const std::vector<double>& abscissae, const std::vector<double>& norms) {
    if (abscissae.size() != norms.size())
        throw invalid_input("order_fit: size mismatch");
    if (abscissae.size() < 3) throw invalid_input("order_fit: need >= 3 family members");
    std::vector<double> lx, ly;
    for (size_t i = 0; i < abscissae.size(); ++i) {
        if (abscissae[i] <= 0.0 || norms[i] <= 0.0)
            throw invalid_input("order_fit: nonpositive abscissa or norm");
        lx.push_back(std::log(abscissae[i]));
        ly.push_back(std::log(norms[i]));
    }
    const double n = static_cast<double>(lx.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (size_t i = 0; i < lx.size(); ++i) {
        sx += lx[i];
        sy += ly[i];
        sxx += lx[i] * lx[i];
        sxy += lx[i] * ly[i];
        syy += ly[i] * ly[i];
    }
    const double vx = n * sxx - sx * sx;
    if (vx <= 0.0) throw invalid_input("order_fit: degenerate abscissae");
    OrderFit fit;
    fit.abscissae = abscissae;
    fit.norms = norms;
    fit.slope = (n * sxy - sx * sy) / vx;
    const double vy = n * syy - sy * sy;
    fit.correlation = vy > 0.0 ? (n * sxy - sx * sy) / std::sqrt(vx * vy) : 1.0;
    return fit;
}

ModelErrorSeries model_error_series(const FieldPairSeries& a, const FieldPairSeries& b) {
    check_series(a);
    check_series(b);
    if (a.size() != b.size()) throw invalid_input("model_error: mismatched time samples");
    ModelErrorSeries out;
    out.times = a.times;
    for (size_t t = 0; t < a.size(); ++t) {
        if (a.zeta[t].size() != b.zeta[t].size())
            throw invalid_input("model_error: mismatched grids");
        out.zeta_sup.push_back(sup_diff(a.zeta[t], b.zeta[t]));
        out.u_sup.push_back(sup_diff(a.u[t], b.u[t]));
    }
    return out;
}

}  // namespace wavelab
