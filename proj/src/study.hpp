#ifndef WAVELAB_STUDY_HPP
#define WAVELAB_STUDY_HPP

#include <string>

#include "breaking.hpp"
#include "config.hpp"
#include "models.hpp"
#include "reconstruct.hpp"
#include "residual.hpp"

namespace wavelab {

struct StudyResult {
    bool pass = false;
    int exit_code = 1;  // 0 pass, 1 tolerance fail (3 = numerical, set by callers on throw)
    std::string summary;
    std::string output_dir;  // resolved directory the artifacts were written to
};

/// Runs the configured study, writing manifest.txt, per-study CSVs and
/// summary.txt under out_root/<config output dir>. Deterministic for a fixed
/// config. Solver/validation errors propagate as exceptions.
StudyResult run_study(const ExperimentConfig& cfg, const std::string& out_root);

/// Human-readable coefficient table for family 'p' or 'q' at a parameter
/// value, echoing the constant, derived and tilde coefficients at sample c.
std::string print_coeffs(char family, const std::string& value_text);

// Shared building blocks (used by the studies and by the acceptance tests).

/// a * sech^2(kappa (x - x0)) sampled on the grid.
Field sech2_profile(const Grid& grid, double amp, double kappa, double x0);

/// Samples up to max_samples interior stored steps and reconstructs the
/// missing unknown. w_tt (needed by the CH reconstruction time derivative) is
/// computed from rhs_fn as the directional derivative of the rhs map along
/// w_t when given; otherwise from centered differences of stored neighbours,
/// whose O(dt^2) error can dominate mu^2-sized residuals on long horizons.
using RhsFn = std::function<Field(const Field&)>;
FieldPairSeries pair_series_from_ch(const Trajectory& traj, ReconVariant variant,
                                    const RegimeParams& theta, const WaveSpeedField& speed,
                                    const Spectral& sp, size_t max_samples = 50,
                                    const RhsFn& rhs_fn = {});
FieldPairSeries pair_series_from_kdv(const Trajectory& traj, ReconVariant variant,
                                     const RegimeParams& theta, const WaveSpeedField& speed,
                                     const Spectral& sp, size_t max_samples = 50);
FieldPairSeries pair_series_from_boussinesq(const BoussinesqTrajectory& traj,
                                            size_t max_samples = 50);

/// 17-significant-digit float formatting used by every CSV cell.
std::string csv_double(double v);

}  // namespace wavelab

#endif
