#include "study.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace wavelab {

namespace fs = std::filesystem;

std::string csv_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Field sech2_profile(const Grid& grid, double amp, double kappa, double x0) {
    Field f(grid.n);
    for (int i = 0; i < grid.n; ++i) {
        const double s = 1.0 / std::cosh(kappa * (grid.x(i) - x0));
        f[i] = amp * s * s;
    }
    return f;
}

namespace {

Field gaussian_profile(const Grid& grid, double amp, double kappa, double x0) {
    Field f(grid.n);
    for (int i = 0; i < grid.n; ++i) {
        const double z = kappa * (grid.x(i) - x0);
        f[i] = amp * std::exp(-z * z);
    }
    return f;
}

double soliton_kappa(double eps, double mu, double amp) {
    return std::sqrt(3.0 * eps * amp / (4.0 * mu));
}

std::vector<size_t> interior_samples(size_t count, size_t max_samples) {
    std::vector<size_t> idx;
    if (count < 3) return idx;
    const size_t lo = 1, hi = count - 2;
    const size_t avail = hi - lo + 1;
    const size_t take = std::min(avail, max_samples);
    for (size_t j = 0; j < take; ++j)
        idx.push_back(lo + (avail - 1) * j / (take > 1 ? take - 1 : 1));
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    return idx;
}

uint64_t fnv1a(const std::string& data) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

struct OutputWriter {
    fs::path dir;
    std::vector<std::pair<std::string, uint64_t>> checksums;

    void write(const std::string& name, const std::string& content) {
        std::ofstream out(dir / name);
        out << content;
        checksums.emplace_back(name, fnv1a(content));
    }
};

struct MemberSetup {
    Grid grid;
    Spectral sp;
    BathymetrySample bath;
    WaveSpeedField speed;
};

MemberSetup make_setup(const ExperimentConfig& cfg, const RegimeParams& th) {
    Grid grid(cfg.grid_n, cfg.grid_L);
    Spectral sp(grid);
    BathymetrySample bath = sample_bathymetry(cfg.bathymetry, th.alpha, grid);
    WaveSpeedField speed = wave_speed(bath, th.beta, grid);
    return MemberSetup{grid, std::move(sp), std::move(bath), std::move(speed)};
}

double init_kappa_for(const ExperimentConfig& cfg, const RegimeParams& th) {
    return cfg.init_kappa > 0.0 ? cfg.init_kappa
                                : soliton_kappa(th.eps, th.mu, cfg.init_amp);
}

GeneralModelSpec model_spec_for(const ExperimentConfig& cfg, const RegimeParams& th,
                                const WaveSpeedField& speed) {
    switch (cfg.model) {
        case ModelSelector::VELOCITY_P:
            return make_velocity_spec(coeffs_from_p(cfg.free_param), speed, th.eps, th.mu);
        case ModelSelector::ELEVATION_Q:
            return make_elevation_spec(coeffs_from_q(cfg.free_param), speed, th.eps, th.mu);
        case ModelSelector::CUSTOM: {
            const ConstantCoeffs cc = coeffs_custom(cfg.A, cfg.B, cfg.E, cfg.F);
            return make_velocity_spec(cc, speed, th.eps, th.mu);
        }
        case ModelSelector::CHGBW:
            return make_chgbw_spec(speed, th.eps, th.mu);
        default:
            throw invalid_input("model_spec_for: KdV selectors use the KdvTopSpec path");
    }
}

bool model_is_kdv(ModelSelector m) {
    return m == ModelSelector::KDV_ELEVATION || m == ModelSelector::KDV_VELOCITY;
}

bool model_evolves_elevation(ModelSelector m) {
    return m == ModelSelector::ELEVATION_Q || m == ModelSelector::CHGBW ||
           m == ModelSelector::KDV_ELEVATION;
}

}  // namespace

FieldPairSeries pair_series_from_ch(const Trajectory& traj, ReconVariant variant,
                                    const RegimeParams& theta, const WaveSpeedField& speed,
                                    const Spectral& sp, size_t max_samples,
                                    const RhsFn& rhs_fn) {
    if (traj.size() < 3) throw invalid_input("pair_series: need >= 3 stored steps");
    ReconstructionSpec spec{variant, theta.eps, theta.mu};
    const bool from_u = variant == ReconVariant::CH_ZETA_FROM_U_FULL ||
                        variant == ReconVariant::CH_ZETA_FROM_U_HS;
    FieldPairSeries out;
    for (size_t i : interior_samples(traj.size(), max_samples)) {
        const Field& w = traj.states[i];
        const Field& w_t = traj.rhs[i];
        Field w_tt(w.size());
        if (rhs_fn) {
            const double d = 1e-4 / std::max(1.0, sup_norm(w_t));
            const Field hi = rhs_fn(w + d * w_t);
            const Field lo = rhs_fn(w + (-d) * w_t);
            for (size_t j = 0; j < w.size(); ++j) w_tt[j] = (hi[j] - lo[j]) / (2.0 * d);
        } else {
            for (size_t j = 0; j < w.size(); ++j)
                w_tt[j] = (traj.rhs[i + 1][j] - traj.rhs[i - 1][j]) / (2.0 * traj.dt);
        }
        const Field other = reconstruct(w, w_t, spec, speed, sp);
        const Field other_t = reconstruct_dt(w, w_t, w_tt, spec, speed, sp);
        out.times.push_back(traj.times[i]);
        if (from_u) {
            out.u.push_back(w);
            out.u_t.push_back(w_t);
            out.zeta.push_back(other);
            out.zeta_t.push_back(other_t);
        } else {
            out.zeta.push_back(w);
            out.zeta_t.push_back(w_t);
            out.u.push_back(other);
            out.u_t.push_back(other_t);
        }
    }
    return out;
}

FieldPairSeries pair_series_from_kdv(const Trajectory& traj, ReconVariant variant,
                                     const RegimeParams& theta, const WaveSpeedField& speed,
                                     const Spectral& sp, size_t max_samples) {
    if (traj.size() < 3) throw invalid_input("pair_series: need >= 3 stored steps");
    ReconstructionSpec spec{variant, theta.eps, theta.mu};
    const bool from_u = variant == ReconVariant::KDV_ZETA_FROM_U_FULL ||
                        variant == ReconVariant::KDV_ZETA_FROM_U_HS;
    const Field empty;
    FieldPairSeries out;
    for (size_t i : interior_samples(traj.size(), max_samples)) {
        const Field& w = traj.states[i];
        const Field& w_t = traj.rhs[i];
        const Field other = reconstruct(w, w_t, spec, speed, sp);
        const Field other_t = reconstruct_dt(w, w_t, empty, spec, speed, sp);
        out.times.push_back(traj.times[i]);
        if (from_u) {
            out.u.push_back(w);
            out.u_t.push_back(w_t);
            out.zeta.push_back(other);
            out.zeta_t.push_back(other_t);
        } else {
            out.zeta.push_back(w);
            out.zeta_t.push_back(w_t);
            out.u.push_back(other);
            out.u_t.push_back(other_t);
        }
    }
    return out;
}

FieldPairSeries pair_series_from_boussinesq(const BoussinesqTrajectory& traj,
                                            size_t max_samples) {
    FieldPairSeries out;
    std::vector<size_t> idx;
    const size_t take = std::min(traj.size(), max_samples);
    for (size_t j = 0; j < take; ++j)
        idx.push_back((traj.size() - 1) * j / (take > 1 ? take - 1 : 1));
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    for (size_t i : idx) {
        out.times.push_back(traj.times[i]);
        out.zeta.push_back(traj.zeta[i]);
        out.zeta_t.push_back(traj.zeta_t[i]);
        out.u.push_back(traj.u[i]);
        out.u_t.push_back(traj.u_t[i]);
    }
    return out;
}

namespace {

// ---------------------------------------------------------------- consistency

StudyResult run_consistency(const ExperimentConfig& cfg, OutputWriter& out) {
    std::ostringstream csv, sum;
    csv << "member,eps,beta,alpha,mu,r1_sup,r2_sup,r1_hs,r2_hs,"
           "r1_sup_unnorm,r2_sup_unnorm\n";
    std::vector<double> mus, unnorm, normed;
    const bool hs_variant = cfg.regime.tag == RegimeTag::CH_JUSTIFIED ||
                            cfg.regime.tag == RegimeTag::KDV_JUSTIFIED;

    for (size_t m = 0; m < cfg.regime.members.size(); ++m) {
        const RegimeParams& th = cfg.regime.members[m];
        MemberSetup su = make_setup(cfg, th);
        const double dt = cfg.dt_factor * su.grid.dx();
        const double t_final = cfg.horizon_multiple / th.eps;
        const double kappa = init_kappa_for(cfg, th);
        const Field w0 = sech2_profile(su.grid, cfg.init_amp, kappa, cfg.init_x0);
        const size_t nsteps = static_cast<size_t>(std::ceil(t_final / dt));
        const size_t store = std::max<size_t>(1, nsteps / 120);

        ResidualOptions opt;
        opt.normalization = th.mu * th.mu;
        ResidualReport rep;
        if (model_is_kdv(cfg.model)) {
            KdvTopSpec spec;
            spec.variant = cfg.model == ModelSelector::KDV_ELEVATION ? KdvVariant::ELEVATION
                                                                     : KdvVariant::VELOCITY;
            spec.eps = th.eps;
            spec.mu = th.mu;
            Trajectory traj =
                evolve_kdv_top(w0, spec, su.speed, su.sp, t_final, dt, nullptr, store);
            const ReconVariant variant =
                spec.variant == KdvVariant::ELEVATION
                    ? (hs_variant ? ReconVariant::KDV_U_FROM_ZETA_HS
                                  : ReconVariant::KDV_U_FROM_ZETA_FULL)
                    : (hs_variant ? ReconVariant::KDV_ZETA_FROM_U_HS
                                  : ReconVariant::KDV_ZETA_FROM_U_FULL);
            FieldPairSeries series =
                pair_series_from_kdv(traj, variant, th, su.speed, su.sp);
            rep = bouss_residuals(series, th, su.speed, su.bath.b, su.sp, opt);
        } else {
            GeneralModelSpec spec = model_spec_for(cfg, th, su.speed);
            Trajectory traj =
                evolve_general(w0, spec, su.speed, su.sp, t_final, dt, nullptr, store);
            const ReconVariant variant =
                model_evolves_elevation(cfg.model)
                    ? ReconVariant::CH_U_FROM_ZETA_FULL
                    : (hs_variant ? ReconVariant::CH_ZETA_FROM_U_HS
                                  : ReconVariant::CH_ZETA_FROM_U_FULL);
            FieldPairSeries series = pair_series_from_ch(
                traj, variant, th, su.speed, su.sp, 50,
                [&](const Field& v) { return rhs_general(v, spec, su.speed, su.sp); });
            rep = gn_residuals(series, th, su.bath.b, su.sp, opt);
        }

        const double worst = std::max(rep.r1_sup, rep.r2_sup);
        mus.push_back(th.mu);
        unnorm.push_back(worst * opt.normalization);
        normed.push_back(worst);
        csv << m << ',' << csv_double(th.eps) << ',' << csv_double(th.beta) << ','
            << csv_double(th.alpha) << ',' << csv_double(th.mu) << ','
            << csv_double(rep.r1_sup) << ',' << csv_double(rep.r2_sup) << ','
            << csv_double(rep.r1_hs) << ',' << csv_double(rep.r2_hs) << ','
            << csv_double(rep.r1_sup * opt.normalization) << ','
            << csv_double(rep.r2_sup * opt.normalization) << '\n';
    }
    out.write("consistency.csv", csv.str());

    StudyResult res;
    if (mus.size() >= 3) {
        const OrderFit fit = order_fit(mus, unnorm);
        const double ratio =
            *std::max_element(normed.begin(), normed.end()) /
            *std::min_element(normed.begin(), normed.end());
        res.pass = fit.slope >= 1.7 && fit.slope <= 2.3 && ratio <= 2.0;
        sum << "slope " << csv_double(fit.slope) << " (target [1.7,2.3])\n"
            << "normalized-residual spread " << csv_double(ratio) << " (target <= 2)\n";
    } else {
        // No slope with < 3 members: report boundedness only.
        res.pass = true;
        sum << "family too small for a slope fit; residuals reported only\n";
    }
    sum << (res.pass ? "PASS" : "FAIL") << '\n';
    res.exit_code = res.pass ? 0 : 1;
    res.summary = sum.str();
    return res;
}

// ------------------------------------------------------------------- breaking

struct BreakingRun {
    BreakingReport report;
    BreakingThreshold threshold;
};

BreakingRun breaking_run(const ExperimentConfig& cfg, const RegimeParams& th, int n_override,
                         double dt_scale) {
    ExperimentConfig c = cfg;
    if (n_override > 0) c.grid_n = n_override;
    MemberSetup su = make_setup(c, th);
    const double dt = cfg.dt_factor * su.grid.dx() * dt_scale;
    const double t_final = cfg.horizon_multiple / th.eps;
    const double kappa = init_kappa_for(cfg, th);
    const Field z0 = sech2_profile(su.grid, cfg.init_amp, kappa, cfg.init_x0);
    BreakingRun run;
    run.threshold = breaking_threshold(z0, th.eps, th.mu, su.speed, su.sp);
    GeneralModelSpec spec = make_chgbw_spec(su.speed, th.eps, th.mu);
    BreakingMonitor mon(th.mu, su.sp);
    struct EarlyStop {};
    const Observer obs = [&](size_t, double t, const Field& z, const Field&) {
        mon.observe(t, z);
        const BreakingReport& r = mon.report();
        // Past detection the solution steepens toward blow-up; stop shortly
        // after t_detect instead of stepping into the singularity.
        if (r.classification == BreakingClass::SURGING_BREAKING && t > 1.02 * r.t_detect)
            throw EarlyStop{};
    };
    try {
        evolve_general(z0, spec, su.speed, su.sp, t_final, dt, obs,
                       std::max<size_t>(1, static_cast<size_t>(std::ceil(t_final / dt)) / 40));
    } catch (const EarlyStop&) {
    } catch (const instability_error&) {
        // Breaking data can fail numerically past detection; keep what was seen.
    } catch (const numerical_failure&) {
    }
    run.report = mon.report();
    return run;
}

StudyResult run_breaking(const ExperimentConfig& cfg, OutputWriter& out) {
    const RegimeParams& th = cfg.regime.members.front();
    BreakingRun base = breaking_run(cfg, th, 0, 1.0);

    std::ostringstream csv;
    csv << "t,sup_slope,sup_amp\n";
    const size_t stride = std::max<size_t>(1, base.report.times.size() / 2000);
    for (size_t i = 0; i < base.report.times.size(); i += stride)
        csv << csv_double(base.report.times[i]) << ','
            << csv_double(base.report.sup_slope[i]) << ','
            << csv_double(base.report.sup_amp[i]) << '\n';
    out.write("breaking_series.csv", csv.str());

    std::ostringstream sum;
    sum << "threshold lhs |sup zeta0'|^2 = " << csv_double(base.threshold.lhs)
        << "  rhs = " << csv_double(base.threshold.rhs)
        << "  (amplitude reading lhs = " << csv_double(base.threshold.lhs_amp) << ")\n"
        << "threshold satisfied: " << (base.threshold.satisfied ? "yes" : "no") << '\n'
        << "energy drift " << csv_double(base.report.energy_drift) << '\n';

    StudyResult res;
    const bool surged = base.report.classification == BreakingClass::SURGING_BREAKING;
    if (base.threshold.satisfied) {
        bool stable = false;
        if (surged) {
            const BreakingRun fine_dt = breaking_run(cfg, th, 0, 0.5);
            const BreakingRun fine_n = breaking_run(cfg, th, cfg.grid_n * 2, 1.0);
            auto rel = [&](const BreakingRun& r) {
                return r.report.classification == BreakingClass::SURGING_BREAKING
                           ? std::abs(r.report.t_detect - base.report.t_detect) /
                                 base.report.t_detect
                           : 1.0;
            };
            stable = rel(fine_dt) <= 0.05 && rel(fine_n) <= 0.05;
            sum << "t_detect " << csv_double(base.report.t_detect)
                << "  dt-refined shift " << csv_double(rel(fine_dt))
                << "  n-refined shift " << csv_double(rel(fine_n)) << '\n';
        }
        res.pass = surged && stable;
        sum << "classification: " << (surged ? "SURGING_BREAKING" : "NO_BREAKING_BY_HORIZON")
            << '\n';
    } else {
        res.pass = !surged;
        sum << "classification: " << (surged ? "SURGING_BREAKING" : "NO_BREAKING_BY_HORIZON")
            << '\n';
    }
    sum << (res.pass ? "PASS" : "FAIL") << '\n';
    res.exit_code = res.pass ? 0 : 1;
    res.summary = sum.str();
    return res;
}

// ---------------------------------------------------------------- convergence

StudyResult run_convergence(const ExperimentConfig& cfg, OutputWriter& out) {
    const RegimeParams& th = cfg.regime.members.front();
    MemberSetup su = make_setup(cfg, th);
    const double t_final = cfg.horizon_multiple / th.eps;
    const double kappa = cfg.init_kappa > 0.0 ? cfg.init_kappa : 1.0;
    const Field z0 = gaussian_profile(su.grid, cfg.init_amp, kappa, cfg.init_x0);
    GeneralModelSpec spec = make_chgbw_spec(su.speed, th.eps, th.mu);

    std::ostringstream csv;
    csv << "dt,energy_drift\n";
    std::vector<double> drifts;
    for (int halve = 0; halve < 2; ++halve) {
        const double dt = cfg.dt_factor * su.grid.dx() / (1 << halve);
        const double E0 = energy_low(z0, th.mu, su.sp);
        double drift = 0.0;
        const Observer obs = [&](size_t, double, const Field& z, const Field&) {
            drift = std::max(drift, std::abs(energy_low(z, th.mu, su.sp) - E0) / E0);
        };
        const size_t nsteps = static_cast<size_t>(std::ceil(t_final / dt));
        evolve_general(z0, spec, su.speed, su.sp, t_final, dt, obs,
                       std::max<size_t>(1, nsteps / 4));
        drifts.push_back(drift);
        csv << csv_double(dt) << ',' << csv_double(drift) << '\n';
    }
    out.write("convergence.csv", csv.str());

    const double ratio = drifts[1] > 0.0 ? drifts[0] / drifts[1] : 16.0;
    StudyResult res;
    res.pass = drifts[0] <= 1e-8 && ratio >= 8.0;
    std::ostringstream sum;
    sum << "drift at dt = " << csv_double(drifts[0]) << " (target <= 1e-8)\n"
        << "drift reduction on halving = " << csv_double(ratio)
        << " (target ~16, accept >= 8)\n"
        << (res.pass ? "PASS" : "FAIL") << '\n';
    res.exit_code = res.pass ? 0 : 1;
    res.summary = sum.str();
    return res;
}

// -------------------------------------------------------------------- soliton

StudyResult run_soliton(const ExperimentConfig& cfg, OutputWriter& out) {
    const RegimeParams& th = cfg.regime.members.front();
    MemberSetup su = make_setup(cfg, th);
    const double a = cfg.init_amp;
    const double kappa = soliton_kappa(th.eps, th.mu, a);
    const double V = 1.0 + th.eps * a / 2.0;
    const Field u0 = sech2_profile(su.grid, a, kappa, cfg.init_x0);

    KdvTopSpec spec;
    spec.variant = cfg.model == ModelSelector::KDV_ELEVATION ? KdvVariant::ELEVATION
                                                             : KdvVariant::VELOCITY;
    spec.eps = th.eps;
    spec.mu = th.mu;

    // Ansatz pre-check: a traveling wave satisfies rhs(u0) = -V u0_x.
    const Field r0 = rhs_kdv_top(u0, spec, su.speed, su.sp);
    const Field u0x = su.sp.derivative(u0, 1);
    double ansatz_res = 0.0;
    for (size_t i = 0; i < r0.size(); ++i)
        ansatz_res = std::max(ansatz_res, std::abs(r0[i] + V * u0x[i]));

    const double dt = cfg.dt_factor * su.grid.dx();
    const double t_final = cfg.horizon_multiple / th.eps;
    double max_err = 0.0;
    const double twoL = 2.0 * su.grid.L;
    const Observer obs = [&](size_t, double t, const Field& u, const Field&) {
        double err = 0.0;
        for (int i = 0; i < su.grid.n; ++i) {
            double xi = su.grid.x(i) - cfg.init_x0 - V * t;
            xi -= twoL * std::floor((xi + su.grid.L) / twoL);  // wrap to [-L, L)
            const double s = 1.0 / std::cosh(kappa * xi);
            err = std::max(err, std::abs(u[i] - a * s * s));
        }
        max_err = std::max(max_err, err);
    };
    const size_t nsteps = static_cast<size_t>(std::ceil(t_final / dt));
    evolve_kdv_top(u0, spec, su.speed, su.sp, t_final, dt, obs,
                   std::max<size_t>(1, nsteps / 4));

    std::ostringstream csv;
    csv << "ansatz_residual,max_sup_error\n"
        << csv_double(ansatz_res) << ',' << csv_double(max_err) << '\n';
    out.write("soliton.csv", csv.str());

    StudyResult res;
    res.pass = ansatz_res <= 1e-10 && max_err <= 1e-4;
    std::ostringstream sum;
    sum << "ansatz residual " << csv_double(ansatz_res) << " (target <= 1e-10)\n"
        << "max sup error " << csv_double(max_err) << " (target <= 1e-4)\n"
        << (res.pass ? "PASS" : "FAIL") << '\n';
    res.exit_code = res.pass ? 0 : 1;
    res.summary = sum.str();
    return res;
}

// ---------------------------------------------------------------- model error

StudyResult run_model_error(const ExperimentConfig& cfg, OutputWriter& out) {
    std::ostringstream csv, sum;
    csv << "member,eps,mu,t_terminal,terminal_zeta_sup,t_fixed,fixed_zeta_sup\n";
    std::vector<double> epss, terminal, fixed;
    // Fixed comparison time, O(1) so no member has reached its terminal time
    // 1/eps yet: the secular eps^2 t growth is still unsaturated there and the
    // fixed-time exponent reads ~2 instead of drifting toward the terminal ~1.
    const double t_fixed = 0.5 * cfg.horizon_multiple;

    for (size_t m = 0; m < cfg.regime.members.size(); ++m) {
        const RegimeParams& th = cfg.regime.members[m];
        MemberSetup su = make_setup(cfg, th);
        const double dt = cfg.dt_factor * su.grid.dx();
        const double t_final = cfg.horizon_multiple / th.eps;
        const double kappa = init_kappa_for(cfg, th);
        const Field z0 = sech2_profile(su.grid, cfg.init_amp, kappa, cfg.init_x0);

        // Matched initial velocity per the reconstruction's HS formula.
        ReconstructionSpec rs{ReconVariant::KDV_U_FROM_ZETA_HS, th.eps, th.mu};
        const Field u0 = reconstruct(z0, Field(), rs, su.speed, su.sp);

        KdvTopSpec kspec;
        kspec.variant = KdvVariant::ELEVATION;
        kspec.eps = th.eps;
        kspec.mu = th.mu;
        const size_t nsteps = static_cast<size_t>(std::ceil(t_final / dt));
        const size_t store = std::max<size_t>(1, nsteps / 100);
        Trajectory ktraj =
            evolve_kdv_top(z0, kspec, su.speed, su.sp, t_final, dt, nullptr, store);

        BoussinesqParams bpar;
        bpar.eps = th.eps;
        bpar.mu = th.mu;
        bpar.beta = th.beta;
        BoussinesqTrajectory btraj = evolve_boussinesq({z0, u0}, bpar, su.speed, su.bath.b,
                                                       su.sp, t_final, dt, store);

        const size_t count = std::min(ktraj.size(), btraj.size());
        double term = 0.0, fix = 0.0;
        size_t i_fix = 0;
        double best = 1e300;
        for (size_t i = 0; i < count; ++i) {
            const double d = std::abs(ktraj.times[i] - t_fixed);
            if (d < best) {
                best = d;
                i_fix = i;
            }
        }
        term = sup_diff(ktraj.states[count - 1], btraj.zeta[count - 1]);
        fix = sup_diff(ktraj.states[i_fix], btraj.zeta[i_fix]);

        epss.push_back(th.eps);
        terminal.push_back(term);
        fixed.push_back(fix);
        csv << m << ',' << csv_double(th.eps) << ',' << csv_double(th.mu) << ','
            << csv_double(ktraj.times[count - 1]) << ',' << csv_double(term) << ','
            << csv_double(ktraj.times[i_fix]) << ',' << csv_double(fix) << '\n';
    }
    out.write("model_error.csv", csv.str());

    StudyResult res;
    if (epss.size() >= 3) {
        const OrderFit ft = order_fit(epss, terminal);
        const OrderFit fx = order_fit(epss, fixed);
        res.pass = ft.slope >= 0.7 && ft.slope <= 1.3 && fx.slope >= 1.7 && fx.slope <= 2.3;
        sum << "terminal-difference exponent " << csv_double(ft.slope)
            << " (target [0.7,1.3])\n"
            << "fixed-time exponent " << csv_double(fx.slope) << " (target [1.7,2.3])\n";
    } else {
        res.pass = true;
        sum << "family too small for exponent fits; differences reported only\n";
    }
    sum << (res.pass ? "PASS" : "FAIL") << '\n';
    res.exit_code = res.pass ? 0 : 1;
    res.summary = sum.str();
    return res;
}

}  // namespace

StudyResult run_study(const ExperimentConfig& cfg, const std::string& out_root) {
    OutputWriter out;
    out.dir = fs::path(out_root) / cfg.output_dir;
    fs::create_directories(out.dir);

    StudyResult res;
    switch (cfg.study) {
        case StudyKind::CONSISTENCY: res = run_consistency(cfg, out); break;
        case StudyKind::BREAKING: res = run_breaking(cfg, out); break;
        case StudyKind::CONVERGENCE: res = run_convergence(cfg, out); break;
        case StudyKind::SOLITON: res = run_soliton(cfg, out); break;
        case StudyKind::MODEL_ERROR: res = run_model_error(cfg, out); break;
    }
    res.output_dir = out.dir.string();

    std::ostringstream sum;
    sum << "study: " << study_kind_name(cfg.study) << '\n' << res.summary;
    out.write("summary.txt", sum.str());

    std::ostringstream man;
    man << "wavelab 1.0.0\n\n[checksums]\n";
    for (const auto& [name, sumv] : out.checksums) {
        char hex[20];
        std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(sumv));
        man << name << " = \"" << hex << "\"\n";
    }
    man << "\n# --- config echo ---\n" << cfg.source_text;
    {
        std::ofstream mf(out.dir / "manifest.txt");
        mf << man.str();
    }
    return res;
}

std::string print_coeffs(char family, const std::string& value_text) {
    const Rational v = parse_rational(value_text);
    const ConstantCoeffs cc = family == 'p' ? coeffs_from_p(v) : coeffs_from_q(v);
    const DerivedAED aed = derived_aed(cc);
    auto rat = [](const Rational& r) {
        std::ostringstream os;
        os << r.numerator();
        if (r.denominator() != 1) os << '/' << r.denominator();
        return os.str();
    };
    std::ostringstream os;
    os << "family " << family << " = " << rat(v) << '\n'
       << "A = " << rat(cc.A) << "  B = " << rat(cc.B) << "  E = " << rat(cc.E)
       << "  F = " << rat(cc.F) << '\n'
       << "a = " << rat(aed.a) << "  e = " << rat(aed.e) << "  d = " << rat(aed.d) << '\n'
       << "m = -B = " << rat(-cc.B) << (cc.regularized() ? "  (regularized path)" : "")
       << "\n\nc        A~                      E~                      F~\n";
    const TildeForm form =
        family == 'p' ? TildeForm::VELOCITY : TildeForm::ELEVATION;
    for (double c : {1.0, 0.9, 0.8}) {
        double t[3];
        tilde_at(cc, c, form, t);
        os << csv_double(c) << "  " << csv_double(t[0]) << "  " << csv_double(t[1]) << "  "
           << csv_double(t[2]) << '\n';
    }
    return os.str();
}

}  // namespace wavelab
