#ifndef WAVELAB_RESIDUAL_HPP
#define WAVELAB_RESIDUAL_HPP

#include "models.hpp"
#include "params.hpp"
#include "spectral.hpp"

namespace wavelab {

/// Synchronized (zeta, u) pair with exact semidiscrete time derivatives at
/// each sampled instant. Produced either directly by the two-way solver or by
/// an evolved unknown plus its reconstruction.
struct FieldPairSeries {
    std::vector<double> times;
    std::vector<Field> zeta, zeta_t;
    std::vector<Field> u, u_t;

    size_t size() const { return times.size(); }
};

struct ResidualReport {
    double r1_sup = 0.0, r2_sup = 0.0;  // sup over sampled times x grid
    double r1_hs = 0.0, r2_hs = 0.0;    // max over sampled times of H^s norms
    double normalization = 1.0;         // mu^2 (GN/CH regimes) or eps^2
    double s = 0.0;
    std::vector<double> times;
};

struct OrderFit {
    std::vector<double> abscissae;  // mu or eps per family member
    std::vector<double> norms;      // un-normalized residual sups
    double slope = 0.0;
    double correlation = 0.0;
};

struct ResidualOptions {
    double normalization = 1.0;  // divide both residuals by this
    double s = 2.0;              // Sobolev index for the _hs fields
};

/// Residuals of the pair against the two GN3 equations:
///   r1 = (zeta_t + [h u]_x) / N,
///   r2 = (u_t + zeta_x + eps u u_x - (mu/3h)[h^3(u_xt + eps u u_xx - eps u_x^2)]_x) / N,
/// h = 1 + eps*zeta - beta*b^(alpha).
ResidualReport gn_residuals(const FieldPairSeries& series, const RegimeParams& theta,
                            const Field& b_alpha, const Spectral& sp,
                            const ResidualOptions& opt);

/// Residuals against the two BOUSS equations (the GN3 pair with the nonlinear
/// dispersion simplified to (mu/3) c^4 u_xxt).
ResidualReport bouss_residuals(const FieldPairSeries& series, const RegimeParams& theta,
                               const WaveSpeedField& speed, const Field& b_alpha,
                               const Spectral& sp, const ResidualOptions& opt);

/// Least-squares slope of log(norm) vs log(abscissa). Needs >= 3 distinct
/// abscissae and positive norms.
OrderFit order_fit(const std::vector<double>& abscissae, const std::vector<double>& norms);

struct ModelErrorSeries {
    std::vector<double> times;
    std::vector<double> zeta_sup;  // |zeta_a - zeta_b|_sup at each time
    std::vector<double> u_sup;
};

/// Sup differences between two synchronized pairs (e.g. reconstructed KdV-top
/// solution vs the Boussinesq reference started from matched data).
ModelErrorSeries model_error_series(const FieldPairSeries& a, const FieldPairSeries& b);

}  // namespace wavelab

#endif
