#include "breaking.hpp"

#include <algorithm>
#include <cmath>

namespace wavelab {

double energy_low(const Field& zeta, double mu, const Spectral& sp) {
    const Field zx = sp.derivative(zeta, 1);
    return sp.l2_inner(zeta, zeta) + mu / 12.0 * sp.l2_inner(zx, zx);
}

double energy_high(const Field& zeta, double mu, const Spectral& sp) {
    const Field zx = sp.derivative(zeta, 1);
    const Field zxx = sp.derivative(zeta, 2);
    const Field zxxx = sp.derivative(zeta, 3);
    return sp.l2_inner(zeta, zeta) + mu / 12.0 * sp.l2_inner(zx, zx) +
           sp.l2_inner(zxx, zxx) + mu / 12.0 * sp.l2_inner(zxxx, zxxx);
}

BreakingThreshold breaking_threshold(const Field& zeta0, double eps, double mu,
                                     const WaveSpeedField& speed, const Spectral& sp) {
    if (eps <= 0.0 || mu <= 0.0) throw invalid_input("breaking_threshold: need eps, mu > 0");
    BreakingThreshold th;
    const Field zx = sp.derivative(zeta0, 1);
    const double slope = sup_norm(zx);
    const double amp = sup_norm(zeta0);
    th.lhs = slope * slope;
    th.lhs_amp = amp * amp;
    th.C0 = energy_low(zeta0, mu, sp);
    const double sc = sup_norm(speed.c), scx = sup_norm(speed.c_x);
    th.C1_max = std::max(sc, scx);
    th.C1_sum = sc + scx;

    const double m34 = std::pow(mu, -0.75), m12 = std::pow(mu, -0.5);
    const double C0 = th.C0;
    auto rhs_with = [&](double C1) {
        return 28.0 / 3.0 * C0 * m34 + 0.5 * eps * std::pow(C0, 1.5) * m34 +
               0.25 * eps * eps * C0 * C0 * m34 + 7.0 / 3.0 * C0 * m12 +
               (8.0 / 3.0 + 4.0 / 3.0) * std::sqrt(C0) * C1 * m34 / eps;
    };
    th.rhs = rhs_with(th.C1_max);
    th.rhs_sum_c1 = rhs_with(th.C1_sum);
    th.satisfied = th.C0 > 0.0 && th.lhs > th.rhs;
    return th;
}

BreakingMonitor::BreakingMonitor(double mu, const Spectral& sp, BreakingGuards guards)
    : mu_(mu), sp_(sp), guards_(guards) {}

void BreakingMonitor::observe(double t, const Field& zeta) {
    const double slope = sup_norm(sp_.derivative(zeta, 1));
    const double amp = sup_norm(zeta);
    if (first_) {
        first_ = false;
        E0_ = energy_low(zeta, mu_, sp_);
        slope0_ = slope;
        amp0_ = amp;
    }
    rep_.times.push_back(t);
    rep_.sup_slope.push_back(slope);
    rep_.sup_amp.push_back(amp);
    if (E0_ > 0.0) {
        const double drift = std::abs(energy_low(zeta, mu_, sp_) - E0_) / E0_;
        rep_.energy_drift = std::max(rep_.energy_drift, drift);
    }
    if (rep_.classification == BreakingClass::NO_BREAKING_BY_HORIZON && slope0_ > 0.0 &&
        slope >= guards_.slope_multiple * slope0_ && amp <= guards_.amp_guard * amp0_) {
        rep_.classification = BreakingClass::SURGING_BREAKING;
        rep_.t_detect = t;
    }
}

BreakingReport monitor_breaking(const Trajectory& traj, double mu, const Spectral& sp,
                                const BreakingGuards& guards) {
    BreakingMonitor mon(mu, sp, guards);
    for (size_t i = 0; i < traj.size(); ++i) mon.observe(traj.times[i], traj.states[i]);
    return mon.report();
}

}  // namespace wavelab
