#include "reconstruct.hpp"

#include <cmath>

namespace wavelab {

namespace {

bool is_zeta_from_u(ReconVariant v) {
    return v == ReconVariant::CH_ZETA_FROM_U_FULL || v == ReconVariant::CH_ZETA_FROM_U_HS ||
           v == ReconVariant::KDV_ZETA_FROM_U_FULL || v == ReconVariant::KDV_ZETA_FROM_U_HS;
}
bool is_full(ReconVariant v) {
    return v == ReconVariant::CH_ZETA_FROM_U_FULL || v == ReconVariant::CH_U_FROM_ZETA_FULL ||
           v == ReconVariant::KDV_U_FROM_ZETA_FULL || v == ReconVariant::KDV_ZETA_FROM_U_FULL;
}
bool is_ch(ReconVariant v) {
    return v == ReconVariant::CH_ZETA_FROM_U_FULL || v == ReconVariant::CH_ZETA_FROM_U_HS ||
           v == ReconVariant::CH_U_FROM_ZETA_FULL;
}

Field secular_integral(const Field& f, double decay_tol, const Spectral& sp) {
    const double tol = decay_tol * std::max(1.0, sup_norm(f));
    return sp.antiderivative_from_left(f, tol);
}

}  // namespace

Field reconstruct(const Field& w, const Field& w_t, const ReconstructionSpec& spec,
                  const WaveSpeedField& speed, const Spectral& sp) {
    const size_t n = w.size();
    const double eps = spec.eps, mu = spec.mu;
    Field out(n);

    if (is_zeta_from_u(spec.variant)) {
        // zeta = c u + (1/2) int c_x u + (eps/4) u^2 + dispersive tail
        for (size_t i = 0; i < n; ++i)
            out[i] = speed.c[i] * w[i] + 0.25 * eps * w[i] * w[i];
        if (is_full(spec.variant)) {
            const Field I = secular_integral(speed.c_x * w, spec.decay_tol, sp);
            for (size_t i = 0; i < n; ++i) out[i] += 0.5 * I[i];
        }
        if (is_ch(spec.variant)) {
            // + (mu/6) c^4 u_xt - eps mu c^4 [ (1/6) u u_xx + (5/48) u_x^2 ]
            const Field u_xt = sp.derivative(w_t, 1);
            const Field u_x = sp.derivative(w, 1);
            const Field u_xx = sp.derivative(w, 2);
            for (size_t i = 0; i < n; ++i) {
                const double c4 = std::pow(speed.c[i], 4);
                out[i] += mu / 6.0 * c4 * u_xt[i] -
                          eps * mu * c4 * (w[i] * u_xx[i] / 6.0 + 5.0 / 48.0 * u_x[i] * u_x[i]);
            }
        } else {
            // - (mu/6) c^5 u_xx
            const Field u_xx = sp.derivative(w, 2);
            for (size_t i = 0; i < n; ++i)
                out[i] -= mu / 6.0 * std::pow(speed.c[i], 5) * u_xx[i];
        }
        return out;
    }

    // u-from-zeta variants
    Field I;
    if (is_full(spec.variant)) {
        Field integrand(n);
        for (size_t i = 0; i < n; ++i) integrand[i] = speed.c_x[i] / speed.c[i] * w[i];
        I = secular_integral(integrand, spec.decay_tol, sp);
    }

    if (spec.variant == ReconVariant::CH_U_FROM_ZETA_FULL) {
        const Field z_xt = sp.derivative(w_t, 1);
        const Field z_x = sp.derivative(w, 1);
        const Field z_xx = sp.derivative(w, 2);
        for (size_t i = 0; i < n; ++i) {
            const double c = speed.c[i];
            const double c2 = c * c, c3 = c2 * c, c4 = c2 * c2, c6 = c4 * c2;
            const double z = w[i];
            const double denom = c2 + eps * z;
            if (denom <= 0.0)
                throw reconstruction_singularity("u_from_zeta: c^2 + eps*zeta <= 0");
            const double P = -0.5 * I[i] - eps / (4.0 * c2) * z * z -
                             eps * eps / (8.0 * c4) * z * z * z +
                             3.0 * std::pow(eps, 3) / (64.0 * c6) * z * z * z * z -
                             mu / 6.0 * c3 * z_xt[i] +
                             eps * mu * c2 * (z * z_xx[i] / 6.0 + z_x[i] * z_x[i] / 48.0);
            out[i] = (z + c2 / denom * P) / c;
        }
        return out;
    }

    // KDV u-from-zeta: u = (1/c)( zeta [- (1/2) int (c_x/c) zeta] - (eps/4c^2) zeta^2
    //                             + (mu/6) c^4 zeta_xx )
    const Field z_xx = sp.derivative(w, 2);
    for (size_t i = 0; i < n; ++i) {
        const double c = speed.c[i];
        const double z = w[i];
        double v = z - eps / (4.0 * c * c) * z * z + mu / 6.0 * std::pow(c, 4) * z_xx[i];
        if (is_full(spec.variant)) v -= 0.5 * I[i];
        out[i] = v / c;
    }
    return out;
}

Field reconstruct_dt(const Field& w, const Field& w_t, const Field& w_tt,
                     const ReconstructionSpec& spec, const WaveSpeedField& speed,
                     const Spectral& sp) {
    const size_t n = w.size();
    const double eps = spec.eps, mu = spec.mu;
    Field out(n);

    if (is_zeta_from_u(spec.variant)) {
        for (size_t i = 0; i < n; ++i)
            out[i] = speed.c[i] * w_t[i] + 0.5 * eps * w[i] * w_t[i];
        if (is_full(spec.variant)) {
            const Field I = secular_integral(speed.c_x * w_t, spec.decay_tol, sp);
            for (size_t i = 0; i < n; ++i) out[i] += 0.5 * I[i];
        }
        if (is_ch(spec.variant)) {
            if (w_tt.size() != n)
                throw invalid_input("reconstruct_dt: CH variants need w_tt");
            const Field u_xtt = sp.derivative(w_tt, 1);
            const Field u_x = sp.derivative(w, 1);
            const Field u_xx = sp.derivative(w, 2);
            const Field u_xt = sp.derivative(w_t, 1);
            const Field u_xxt = sp.derivative(w_t, 2);
            for (size_t i = 0; i < n; ++i) {
                const double c4 = std::pow(speed.c[i], 4);
                out[i] += mu / 6.0 * c4 * u_xtt[i] -
                          eps * mu * c4 *
                              ((w_t[i] * u_xx[i] + w[i] * u_xxt[i]) / 6.0 +
                               5.0 / 24.0 * u_x[i] * u_xt[i]);
            }
        } else {
            const Field u_xxt = sp.derivative(w_t, 2);
            for (size_t i = 0; i < n; ++i)
                out[i] -= mu / 6.0 * std::pow(speed.c[i], 5) * u_xxt[i];
        }
        return out;
    }

    Field I;
    if (is_full(spec.variant)) {
        Field integrand(n);
        for (size_t i = 0; i < n; ++i) integrand[i] = speed.c_x[i] / speed.c[i] * w_t[i];
        I = secular_integral(integrand, spec.decay_tol, sp);
    }

    if (spec.variant == ReconVariant::CH_U_FROM_ZETA_FULL) {
        if (w_tt.size() != n) throw invalid_input("reconstruct_dt: CH variants need w_tt");
        const Field z_xt = sp.derivative(w_t, 1);
        const Field z_xtt = sp.derivative(w_tt, 1);
        const Field z_x = sp.derivative(w, 1);
        const Field z_xx = sp.derivative(w, 2);
        const Field z_xxt = sp.derivative(w_t, 2);
        Field Iz;
        {
            Field integrand(n);
            for (size_t i = 0; i < n; ++i) integrand[i] = speed.c_x[i] / speed.c[i] * w[i];
            Iz = secular_integral(integrand, spec.decay_tol, sp);
        }
        for (size_t i = 0; i < n; ++i) {
            const double c = speed.c[i];
            const double c2 = c * c, c3 = c2 * c, c4 = c2 * c2, c6 = c4 * c2;
            const double z = w[i], zt = w_t[i];
            const double denom = c2 + eps * z;
            if (denom <= 0.0)
                throw reconstruction_singularity("u_from_zeta: c^2 + eps*zeta <= 0");
            const double P = -0.5 * Iz[i] - eps / (4.0 * c2) * z * z -
                             eps * eps / (8.0 * c4) * z * z * z +
                             3.0 * std::pow(eps, 3) / (64.0 * c6) * z * z * z * z -
                             mu / 6.0 * c3 * z_xt[i] +
                             eps * mu * c2 * (z * z_xx[i] / 6.0 + z_x[i] * z_x[i] / 48.0);
            const double P_t = -0.5 * I[i] - eps / (2.0 * c2) * z * zt -
                               3.0 * eps * eps / (8.0 * c4) * z * z * zt +
                               3.0 * std::pow(eps, 3) / (16.0 * c6) * z * z * z * zt -
                               mu / 6.0 * c3 * z_xtt[i] +
                               eps * mu * c2 *
                                   ((zt * z_xx[i] + z * z_xxt[i]) / 6.0 +
                                    z_x[i] * z_xt[i] / 24.0);
            const double R = c2 / denom;
            const double R_t = -c2 * eps * zt / (denom * denom);
            out[i] = (zt + R_t * P + R * P_t) / c;
        }
        return out;
    }

    const Field z_xxt = sp.derivative(w_t, 2);
    for (size_t i = 0; i < n; ++i) {
        const double c = speed.c[i];
        double v = w_t[i] - eps / (2.0 * c * c) * w[i] * w_t[i] +
                   mu / 6.0 * std::pow(c, 4) * z_xxt[i];
        if (is_full(spec.variant)) v -= 0.5 * I[i];
        out[i] = v / c;
    }
    return out;
}

}  // namespace wavelab
