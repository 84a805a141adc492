#ifndef WAVELAB_BREAKING_HPP
#define WAVELAB_BREAKING_HPP

#include "models.hpp"
#include "params.hpp"
#include "spectral.hpp"

namespace wavelab {

/// E = int( zeta^2 + (mu/12) zeta_x^2 ), exactly conserved by the q=1/12
/// elevation model with variable c in the transport terms only.
double energy_low(const Field& zeta, double mu, const Spectral& sp);

/// int( zeta^2 + (mu/12) zeta_x^2 + zeta_xx^2 + (mu/12) zeta_xxx^2 ).
double energy_high(const Field& zeta, double mu, const Spectral& sp);

struct BreakingThreshold {
    bool satisfied = false;
    double lhs = 0.0;       // |sup zeta0'|^2 (slope reading; see README)
    double lhs_amp = 0.0;   // |sup zeta0|^2, the amplitude reading, reported alongside
    double rhs = 0.0;       // six-term bound with C1 = max(sup|c|, sup|c_x|)
    double rhs_sum_c1 = 0.0;  // same bound with C1 = sup|c| + sup|c_x|
    double C0 = 0.0;        // int( zeta0^2 + (mu/12) zeta0'^2 )
    double C1_max = 0.0, C1_sum = 0.0;
};

/// Analytic breaking criterion: compares |sup zeta0'|^2 against
///   (28/3) C0 mu^{-3/4} + (1/2) eps C0^{3/2} mu^{-3/4} + (1/4) eps^2 C0^2 mu^{-3/4}
///   + (7/3) C0 mu^{-1/2} + (8/3 + 4/3) C0^{1/2} C1 mu^{-3/4} eps^{-1}.
/// Both W^{1,inf} conventions for C1 (max and sum) are evaluated; `satisfied`
/// uses the max convention.
BreakingThreshold breaking_threshold(const Field& zeta0, double eps, double mu,
                                     const WaveSpeedField& speed, const Spectral& sp);

enum class BreakingClass { NO_BREAKING_BY_HORIZON, SURGING_BREAKING };

struct BreakingGuards {
    double slope_multiple = 20.0;  // sup zeta_x >= this x initial slope
    double amp_guard = 3.0;        // ... while sup|zeta| stays <= this x initial amp
};

struct BreakingReport {
    BreakingClass classification = BreakingClass::NO_BREAKING_BY_HORIZON;
    double t_detect = -1.0;  // < 0 when no breaking detected
    std::vector<double> times;
    std::vector<double> sup_slope, sup_amp;
    double energy_drift = 0.0;  // max relative drift of energy_low
};

/// Surging-breaker detection on a stored (chgbw) trajectory.
BreakingReport monitor_breaking(const Trajectory& traj, double mu, const Spectral& sp,
                                const BreakingGuards& guards = {});

/// Streaming variant, fed from an evolver observer; keeps what was seen even
/// if the run later fails numerically (breaking data eventually does).
class BreakingMonitor {
  public:
    BreakingMonitor(double mu, const Spectral& sp, BreakingGuards guards = {});
    void observe(double t, const Field& zeta);
    const BreakingReport& report() const { return rep_; }

  private:
    double mu_;
    const Spectral& sp_;
    BreakingGuards guards_;
    BreakingReport rep_;
    bool first_ = true;
    double E0_ = 0.0, slope0_ = 0.0, amp0_ = 0.0;
};

}  // namespace wavelab

#endif
