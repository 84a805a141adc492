#include "models.hpp"

#include <cmath>
#include <sstream>

namespace wavelab {

namespace {

Field constant_field(size_t n, double v) { return Field(n, v); }

Field pow_field(const Field& c, int p) {
    Field r(c.size());
    for (size_t i = 0; i < c.size(); ++i) r[i] = std::pow(c[i], p);
    return r;
}

double mean(const Field& f) {
    double s = 0.0;
    for (double v : f) s += v;
    return s / f.size();
}

void check_state(const Field& u, double sup0, size_t step) {
    for (double v : u)
        if (std::isnan(v) || std::isinf(v)) {
            std::ostringstream os;
            os << "numerical failure (NaN/Inf) at step " << step;
            throw numerical_failure(os.str());
        }
    const double guard = 1e6 * std::max(sup0, 1e-12);
    if (sup_norm(u) > guard) {
        std::ostringstream os;
        os << "instability detected at step " << step << ": sup " << sup_norm(u)
           << " exceeds guard " << guard;
        throw instability_error(os.str());
    }
}

}  // namespace

GeneralModelSpec make_velocity_spec(const ConstantCoeffs& cc, const WaveSpeedField& speed,
                                    double eps, double mu) {
    GeneralModelSpec spec;
    const size_t n = speed.c.size();
    spec.m = cc.m();
    spec.k = 1.5;
    spec.f_terms.push_back({1, constant_field(n, 1.5)});
    const TildeCoeffs tc = tilde_coeffs(cc, speed, TildeForm::VELOCITY);
    spec.g = tc.A_tilde;
    spec.h1 = tc.E_tilde;
    spec.h2 = 0.5 * tc.F_tilde;
    spec.eps = eps;
    spec.mu = mu;
    return spec;
}

GeneralModelSpec make_elevation_spec(const ConstantCoeffs& cc, const WaveSpeedField& speed,
                                     double eps, double mu) {
    GeneralModelSpec spec;
    const size_t n = speed.c.size();
    spec.m = cc.m();
    spec.k = 0.5;
    Field f1(n), f2(n), f3(n);
    for (size_t i = 0; i < n; ++i) {
        const double c = speed.c[i];
        f1[i] = 1.5 / c;
        f2[i] = -0.375 / (c * c * c);
        f3[i] = 0.1875 / (c * c * c * c * c);
    }
    spec.f_terms.push_back({1, std::move(f1)});
    spec.f_terms.push_back({2, std::move(f2)});
    spec.f_terms.push_back({3, std::move(f3)});
    const TildeCoeffs tc = tilde_coeffs(cc, speed, TildeForm::ELEVATION);
    spec.g = tc.A_tilde;
    spec.h1 = tc.E_tilde;
    spec.h2 = 0.5 * tc.F_tilde;
    spec.eps = eps;
    spec.mu = mu;
    return spec;
}

GeneralModelSpec make_chgbw_spec(const WaveSpeedField& speed, double eps, double mu) {
    GeneralModelSpec spec;
    const size_t n = speed.c.size();
    spec.m = 1.0 / 12.0;
    spec.k = 0.5;
    spec.f_terms.push_back({1, constant_field(n, 1.5)});
    spec.f_terms.push_back({2, constant_field(n, -0.375)});
    spec.f_terms.push_back({3, constant_field(n, 0.1875)});
    spec.g = constant_field(n, 1.0 / 12.0);
    spec.h1 = constant_field(n, -7.0 / 24.0);
    spec.h2 = constant_field(n, -7.0 / 24.0);
    spec.eps = eps;
    spec.mu = mu;
    return spec;
}

Field rhs_general(const Field& u, const GeneralModelSpec& spec, const WaveSpeedField& speed,
                  const Spectral& sp) {
    if (!(spec.m > 0.0))
        throw wrong_solver_path("rhs_general: m must be > 0 (use the KdV-top path for m=0)");
    const Field u_x = sp.derivative(u, 1);
    const Field u_xx = sp.derivative(u, 2);
    const Field u_xxx = sp.derivative(u, 3);
    const Field ud = sp.dealias(u);
    const Field u_xd = sp.dealias(u_x);

    Field rhs(u.size(), 0.0);
    for (size_t i = 0; i < u.size(); ++i)
        rhs[i] = -(speed.c[i] * u_x[i] + spec.k * speed.c_x[i] * u[i] + spec.mu * spec.g[i] * u_xxx[i]);

    for (const auto& ft : spec.f_terms) {
        Field term = ft.fj;
        for (int p = 0; p < ft.j; ++p) term = term * ud;
        term = sp.dealias(term * u_xd);
        const double w = -std::pow(spec.eps, ft.j);
        for (size_t i = 0; i < u.size(); ++i) rhs[i] += w * term[i];
    }

    const double em = spec.eps * spec.mu;
    if (em != 0.0) {
        const Field t1 = sp.dealias(spec.h1 * ud * sp.dealias(u_xxx));
        const Field h2u = spec.h2 * u;
        const Field t2 = sp.dealias(sp.dealias(sp.derivative(h2u, 1)) * sp.dealias(u_xx));
        const Field t3 = sp.dealias(u_xd * sp.dealias(sp.derivative(h2u, 2)));
        for (size_t i = 0; i < u.size(); ++i) rhs[i] += em * (t1[i] + t2[i] + t3[i]);
    }
    return sp.helmholtz_solve(rhs, spec.mu * spec.m);
}

Field rhs_kdv_top(const Field& w, const KdvTopSpec& spec, const WaveSpeedField& speed,
                  const Spectral& sp) {
    const size_t n = w.size();
    const Field w_x = sp.derivative(w, 1);
    const Field w_xxx = sp.derivative(w, 3);
    const Field nl = sp.dealias(sp.dealias(w) * sp.dealias(w_x));
    const double k = (spec.variant == KdvVariant::ELEVATION) ? 0.5 : 1.5;
    Field out(n);
    for (size_t i = 0; i < n; ++i) {
        const double c = speed.c[i];
        const double g = (spec.variant == KdvVariant::ELEVATION) ? 1.5 / c : 1.5;
        const double c5 = c * c * c * c * c;
        out[i] = -(c * w_x[i] + k * speed.c_x[i] * w[i] + spec.eps * g * nl[i] +
                   spec.mu / 6.0 * c5 * w_xxx[i]);
    }
    return out;
}

std::pair<Field, Field> rhs_boussinesq(const BoussinesqState& state, const BoussinesqParams& par,
                                       const WaveSpeedField& speed, const Field& b_alpha,
                                       const Spectral& sp) {
    const size_t n = state.zeta.size();
    Field h(n);
    for (size_t i = 0; i < n; ++i) {
        h[i] = 1.0 + par.eps * state.zeta[i] - par.beta * b_alpha[i];
        if (h[i] <= 0.0) {
            std::ostringstream os;
            os << "rhs_boussinesq: nonpositive depth h = " << h[i] << " at node " << i;
            throw nonpositive_depth(os.str());
        }
    }
    // zeta_t = -d_x(h u)
    Field hu = state.u + par.eps * sp.dealias(sp.dealias(state.zeta) * sp.dealias(state.u));
    for (size_t i = 0; i < n; ++i) hu[i] -= par.beta * b_alpha[i] * state.u[i];
    Field zeta_t = -1.0 * sp.derivative(hu, 1);

    // (1 - (mu/3) c^4 d_xx) u_t = -(zeta_x + eps u u_x), variable-coefficient
    // solve preconditioned by the constant-coefficient inverse at mean(c^4).
    const Field zeta_x = sp.derivative(state.zeta, 1);
    const Field uux = sp.dealias(sp.dealias(state.u) * sp.dealias(sp.derivative(state.u, 1)));
    Field g0(n);
    for (size_t i = 0; i < n; ++i) g0[i] = -(zeta_x[i] + par.eps * uux[i]);

    const Field c4 = pow_field(speed.c, 4);
    const double c4m = mean(c4);
    const double kap = par.mu / 3.0;
    Field u_t = sp.helmholtz_solve(g0, kap * c4m);
    const double scale = std::max(1.0, sup_norm(g0));
    for (int it = 0;; ++it) {
        const Field utxx = sp.derivative(u_t, 2);
        double res = 0.0;
        Field next(n);
        for (size_t i = 0; i < n; ++i) {
            next[i] = g0[i] + kap * (c4[i] - c4m) * utxx[i];
            res = std::max(res, std::abs(u_t[i] - kap * c4[i] * utxx[i] - g0[i]));
        }
        if (res <= par.elliptic_tol * scale) break;
        if (it >= par.elliptic_max_iter) {
            std::ostringstream os;
            os << "rhs_boussinesq: elliptic solve did not converge, residual " << res;
            throw solver_failure(os.str());
        }
        u_t = sp.helmholtz_solve(next, kap * c4m);
    }
    return {std::move(zeta_t), std::move(u_t)};
}

size_t Trajectory::index_at(double t) const {
    if (times.empty()) throw invalid_input("Trajectory: empty");
    const double i = (t - times.front()) / dt;
    const long idx = std::lround(i);
    return (size_t)std::min<long>(std::max<long>(idx, 0), (long)times.size() - 1);
}

Trajectory evolve_general(const Field& u0, const GeneralModelSpec& spec,
                          const WaveSpeedField& speed, const Spectral& sp, double t_final,
                          double dt, const Observer& obs, size_t store_every) {
    if (!(spec.m > 0.0)) throw wrong_solver_path("evolve_general: m must be > 0");
    if (store_every == 0) store_every = 1;
    size_t nsteps = (size_t)std::ceil(t_final / dt - 1e-12);
    if (store_every > nsteps) store_every = std::max<size_t>(nsteps, 1);
    nsteps = ((nsteps + store_every - 1) / store_every) * store_every;
    const double h = t_final / nsteps;
    const double sup0 = sup_norm(u0);

    Trajectory traj;
    traj.dt = h * store_every;

    Field u = u0;
    auto rhs = [&](const Field& v) { return rhs_general(v, spec, speed, sp); };
    Field f = rhs(u);
    traj.times.push_back(0.0);
    traj.states.push_back(u);
    traj.rhs.push_back(f);
    if (obs) obs(0, 0.0, u, f);

    for (size_t s = 1; s <= nsteps; ++s) {
        const Field& k1 = f;
        const Field k2 = rhs(u + (h / 2) * k1);
        const Field k3 = rhs(u + (h / 2) * k2);
        const Field k4 = rhs(u + h * k3);
        for (size_t i = 0; i < u.size(); ++i)
            u[i] += (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        check_state(u, sup0, s);
        f = rhs(u);
        if (s % store_every == 0) {
            traj.times.push_back(s * h);
            traj.states.push_back(u);
            traj.rhs.push_back(f);
        }
        if (obs) obs(s, s * h, u, f);
    }
    return traj;
}

Trajectory evolve_kdv_top(const Field& w0, const KdvTopSpec& spec, const WaveSpeedField& speed,
                          const Spectral& sp, double t_final, double dt, const Observer& obs,
                          size_t store_every) {
    if (store_every == 0) store_every = 1;
    size_t nsteps = (size_t)std::ceil(t_final / dt - 1e-12);
    if (store_every > nsteps) store_every = std::max<size_t>(nsteps, 1);
    nsteps = ((nsteps + store_every - 1) / store_every) * store_every;
    const double h = t_final / nsteps;
    const double sup0 = sup_norm(w0);
    const size_t n = w0.size();
    const Grid& grid = sp.grid();

    // Mean transport and mean dispersion are integrated exactly.
    const double cbar = mean(speed.c);
    const Field c5f = pow_field(speed.c, 5);
    const double c5bar = mean(c5f);
    const double k_w = (spec.variant == KdvVariant::ELEVATION) ? 0.5 : 1.5;

    auto nonlinear = [&](const Field& w) {
        const Field w_x = sp.derivative(w, 1);
        const Field w_xxx = sp.derivative(w, 3);
        const Field nl = sp.dealias(sp.dealias(w) * sp.dealias(w_x));
        Field out(n);
        for (size_t i = 0; i < n; ++i) {
            const double c = speed.c[i];
            const double g = (spec.variant == KdvVariant::ELEVATION) ? 1.5 / c : 1.5;
            out[i] = -((c - cbar) * w_x[i] + k_w * speed.c_x[i] * w[i] +
                       spec.eps * g * nl[i] + spec.mu / 6.0 * (c5f[i] - c5bar) * w_xxx[i]);
        }
        return sp.forward(out);
    };

    const int nc = (int)grid.n / 2 + 1;
    std::vector<std::complex<double>> E(nc), E2(nc);
    for (int j = 0; j < nc; ++j) {
        const double k = grid.k(j);
        // linear symbol of -(cbar d_x + (mu c5bar/6) d_x^3)
        const std::complex<double> lam(0.0, -cbar * k + spec.mu * c5bar / 6.0 * k * k * k);
        E[j] = std::exp(lam * (h / 2.0));
        E2[j] = std::exp(lam * h);
    }

    Trajectory traj;
    traj.dt = h * store_every;
    Field w = w0;
    traj.times.push_back(0.0);
    traj.states.push_back(w);
    traj.rhs.push_back(rhs_kdv_top(w, spec, speed, sp));
    if (obs) obs(0, 0.0, w, traj.rhs.back());

    auto wh = sp.forward(w);
    std::vector<std::complex<double>> a(nc), t1(nc), t2(nc), t3(nc);
    for (size_t s = 1; s <= nsteps; ++s) {
        const auto k1 = nonlinear(w);
        for (int j = 0; j < nc; ++j) a[j] = E[j] * (wh[j] + (h / 2.0) * k1[j]);
        const auto k2 = nonlinear(sp.inverse(a));
        for (int j = 0; j < nc; ++j) t1[j] = E[j] * wh[j] + (h / 2.0) * k2[j];
        const auto k3 = nonlinear(sp.inverse(t1));
        for (int j = 0; j < nc; ++j) t2[j] = E2[j] * wh[j] + h * E[j] * k3[j];
        const auto k4 = nonlinear(sp.inverse(t2));
        for (int j = 0; j < nc; ++j)
            wh[j] = E2[j] * wh[j] +
                    (h / 6.0) * (E2[j] * k1[j] + 2.0 * E[j] * (k2[j] + k3[j]) + k4[j]);
        w = sp.inverse(wh);
        check_state(w, sup0, s);
        if (s % store_every == 0 || obs) {
            Field f = rhs_kdv_top(w, spec, speed, sp);
            if (s % store_every == 0) {
                traj.times.push_back(s * h);
                traj.states.push_back(w);
                traj.rhs.push_back(f);
            }
            if (obs) obs(s, s * h, w, f);
        }
    }
    return traj;
}

BoussinesqTrajectory evolve_boussinesq(const BoussinesqState& s0, const BoussinesqParams& par,
                                       const WaveSpeedField& speed, const Field& b_alpha,
                                       const Spectral& sp, double t_final, double dt,
                                       size_t store_every) {
    if (store_every == 0) store_every = 1;
    size_t nsteps = (size_t)std::ceil(t_final / dt - 1e-12);
    if (store_every > nsteps) store_every = std::max<size_t>(nsteps, 1);
    nsteps = ((nsteps + store_every - 1) / store_every) * store_every;
    const double h = t_final / nsteps;
    const double sup0 = std::max(sup_norm(s0.zeta), sup_norm(s0.u));

    BoussinesqTrajectory traj;
    traj.dt = h * store_every;
    BoussinesqState st = s0;
    auto rhs = [&](const BoussinesqState& s) { return rhs_boussinesq(s, par, speed, b_alpha, sp); };
    auto push = [&](double t, const BoussinesqState& s, const std::pair<Field, Field>& f) {
        traj.times.push_back(t);
        traj.zeta.push_back(s.zeta);
        traj.u.push_back(s.u);
        traj.zeta_t.push_back(f.first);
        traj.u_t.push_back(f.second);
    };
    auto f = rhs(st);
    push(0.0, st, f);

    auto advance = [](const BoussinesqState& s, const std::pair<Field, Field>& k, double w) {
        BoussinesqState r = s;
        for (size_t i = 0; i < r.zeta.size(); ++i) {
            r.zeta[i] += w * k.first[i];
            r.u[i] += w * k.second[i];
        }
        return r;
    };

    for (size_t s = 1; s <= nsteps; ++s) {
        const auto& k1 = f;
        const auto k2 = rhs(advance(st, k1, h / 2));
        const auto k3 = rhs(advance(st, k2, h / 2));
        const auto k4 = rhs(advance(st, k3, h));
        for (size_t i = 0; i < st.zeta.size(); ++i) {
            st.zeta[i] += (h / 6.0) * (k1.first[i] + 2 * k2.first[i] + 2 * k3.first[i] + k4.first[i]);
            st.u[i] += (h / 6.0) * (k1.second[i] + 2 * k2.second[i] + 2 * k3.second[i] + k4.second[i]);
        }
        check_state(st.zeta, sup0, s);
        check_state(st.u, sup0, s);
        f = rhs(st);
        if (s % store_every == 0) push(s * h, st, f);
    }
    return traj;
}

}  // namespace wavelab
