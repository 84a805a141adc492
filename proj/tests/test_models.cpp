#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "models.hpp"

using namespace wavelab;

namespace {
const double PI = Grid::pi();

// Independent spectral primitives for the transcription oracles: only the
// FFT wrappers are shared with the library code under test.
Field oracle_deriv(const Spectral& sp, const Field& f, int order) {
    auto fh = sp.forward(f);
    const Grid& g = sp.grid();
    for (size_t j = 0; j < fh.size(); ++j) {
        std::complex<double> ik(0.0, g.k((int)j));
        std::complex<double> m = 1.0;
        for (int p = 0; p < order; ++p) m *= ik;
        fh[j] *= m;
    }
    if (order % 2 == 1) fh.back() = 0.0;
    return sp.inverse(fh);
}

Field oracle_helm(const Spectral& sp, const Field& f, double kappa) {
    auto fh = sp.forward(f);
    const Grid& g = sp.grid();
    for (size_t j = 0; j < fh.size(); ++j) fh[j] /= 1.0 + kappa * g.k((int)j) * g.k((int)j);
    return sp.inverse(fh);
}

WaveSpeedField flat_speed(int n) {
    WaveSpeedField w;
    w.c.assign(n, 1.0);
    w.c_x.assign(n, 0.0);
    w.c_xx.assign(n, 0.0);
    w.c_xxx.assign(n, 0.0);
    return w;
}

Field smooth_data(const Grid& g) {
    // broad two-bump profile: u^4 stays resolved below the 2/3-rule cutoff,
    // so plain-product transcriptions agree with the dealiased rhs to 1e-13
    Field u(g.n);
    for (int i = 0; i < g.n; ++i) {
        const double x = g.x(i);
        u[i] = std::exp(-(x - 1.0) * (x - 1.0) / 8.0) +
               0.5 * std::exp(-(x + 2.0) * (x + 2.0) / 8.0);
    }
    return u;
}
}  // namespace

TEST_CASE("flat-bottom velocity equation reduces to the constant-coefficient form") {
    Grid g(256, 30.0);
    Spectral sp(g);
    const WaveSpeedField speed = flat_speed(g.n);
    const double eps = 0.15, mu = 0.05;
    const ConstantCoeffs cc = coeffs_from_p(Rational(-1, 12));
    const GeneralModelSpec spec = make_velocity_spec(cc, speed, eps, mu);
    const Field u = smooth_data(g);
    const Field got = rhs_general(u, spec, speed, sp);

    // (1 - mu m dxx) u_t = -(u_x + (3/2) eps u u_x + mu A u_xxx)
    //                      + eps mu (E u u_xxx + F u_x u_xx)       [constant coeffs]
    const double A = boost::rational_cast<double>(cc.A);
    const double B = boost::rational_cast<double>(cc.B);
    const double E = boost::rational_cast<double>(cc.E);
    const double F = boost::rational_cast<double>(cc.F);
    const Field ux = oracle_deriv(sp, u, 1);
    const Field uxx = oracle_deriv(sp, u, 2);
    const Field uxxx = oracle_deriv(sp, u, 3);
    Field r(g.n);
    for (int i = 0; i < g.n; ++i)
        r[i] = -(ux[i] + 1.5 * eps * u[i] * ux[i] + mu * A * uxxx[i]) +
               eps * mu * (E * u[i] * uxxx[i] + F * ux[i] * uxx[i]);
    const Field want = oracle_helm(sp, r, mu * (-B));
    CHECK(sup_diff(got, want) < 1e-12);
}

TEST_CASE("flat-bottom elevation equation reduces to the constant-coefficient form") {
    Grid g(256, 30.0);
    Spectral sp(g);
    const WaveSpeedField speed = flat_speed(g.n);
    const double eps = 0.2, mu = 0.04;
    const ConstantCoeffs cc = coeffs_from_q(Rational(1, 24));
    const GeneralModelSpec spec = make_elevation_spec(cc, speed, eps, mu);
    const Field z = smooth_data(g);
    const Field got = rhs_general(z, spec, speed, sp);

    const double A = boost::rational_cast<double>(cc.A);
    const double B = boost::rational_cast<double>(cc.B);
    const double E = boost::rational_cast<double>(cc.E);
    const double F = boost::rational_cast<double>(cc.F);
    const Field zx = oracle_deriv(sp, z, 1);
    const Field zxx = oracle_deriv(sp, z, 2);
    const Field zxxx = oracle_deriv(sp, z, 3);
    Field r(g.n);
    for (int i = 0; i < g.n; ++i) {
        const double zz = z[i];
        r[i] = -(zx[i] +
                 eps * 1.5 * zz * zx[i] - eps * eps * 0.375 * zz * zz * zx[i] +
                 eps * eps * eps * 0.1875 * zz * zz * zz * zx[i] + mu * A * zxxx[i]) +
               eps * mu * (E * zz * zxxx[i] + F * zx[i] * zxx[i]);
    }
    const Field want = oracle_helm(sp, r, mu * (-B));
    CHECK(sup_diff(got, want) < 1e-12);
}

TEST_CASE("q=1/12 general rhs matches the dedicated breaking-model transcription") {
    Grid g(256, 30.0);
    Spectral sp(g);
    const WaveSpeedField speed = flat_speed(g.n);
    const double eps = 0.2, mu = 0.04;
    const Field z = smooth_data(g);

    // direct transcription:
    // (1 - (mu/12) dxx) z_t = -(z_x + (3/2)eps z z_x - (3/8)eps^2 z^2 z_x
    //     + (3/16) eps^3 z^3 z_x + (mu/12) z_xxx) - (7/24) eps mu (z z_xxx + 2 z_x z_xx)
    const Field zx = oracle_deriv(sp, z, 1);
    const Field zxx = oracle_deriv(sp, z, 2);
    const Field zxxx = oracle_deriv(sp, z, 3);
    Field r(g.n);
    for (int i = 0; i < g.n; ++i) {
        const double zz = z[i];
        r[i] = -(zx[i] + 1.5 * eps * zz * zx[i] - 0.375 * eps * eps * zz * zz * zx[i] +
                 0.1875 * eps * eps * eps * zz * zz * zz * zx[i] + mu / 12.0 * zxxx[i]) -
               7.0 / 24.0 * eps * mu * (zz * zxxx[i] + 2.0 * zx[i] * zxx[i]);
    }
    const Field want = oracle_helm(sp, r, mu / 12.0);

    const Field via_chgbw = rhs_general(z, make_chgbw_spec(speed, eps, mu), speed, sp);
    CHECK(sup_diff(via_chgbw, want) < 1e-10);

    // ... and the tilde algebra produces the same equation from q = 1/12
    const GeneralModelSpec from_q =
        make_elevation_spec(coeffs_from_q(Rational(1, 12)), speed, eps, mu);
    CHECK(sup_diff(rhs_general(z, from_q, speed, sp), want) < 1e-10);
}

TEST_CASE("rhs_general rejects the m <= 0 path") {
    Grid g(64, 10.0);
    Spectral sp(g);
    const WaveSpeedField speed = flat_speed(g.n);
    GeneralModelSpec spec = make_chgbw_spec(speed, 0.1, 0.1);
    spec.m = 0.0;
    CHECK_THROWS_AS(rhs_general(Field(g.n, 0.0), spec, speed, sp), wrong_solver_path);
}

TEST_CASE("kdv-top rhs transcription with variable speed") {
    Grid g(256, 20.0);
    Spectral sp(g);
    Field c(g.n), cx(g.n);
    for (int i = 0; i < g.n; ++i) {
        const double x = g.x(i);
        c[i] = std::sqrt(1.0 - 0.2 * std::exp(-x * x));
        cx[i] = 0.2 * x * std::exp(-x * x) / c[i];
    }
    WaveSpeedField speed;
    speed.c = c;
    speed.c_x = cx;
    speed.c_xx.assign(g.n, 0.0);
    speed.c_xxx.assign(g.n, 0.0);

    const double eps = 0.1, mu = 0.05;
    const Field w = smooth_data(g);
    const Field wx = oracle_deriv(sp, w, 1);
    const Field wxxx = oracle_deriv(sp, w, 3);

    for (KdvVariant variant : {KdvVariant::ELEVATION, KdvVariant::VELOCITY}) {
        KdvTopSpec spec{variant, eps, mu};
        const Field got = rhs_kdv_top(w, spec, speed, sp);
        Field want(g.n);
        for (int i = 0; i < g.n; ++i) {
            const double k = variant == KdvVariant::ELEVATION ? 0.5 : 1.5;
            const double gg = variant == KdvVariant::ELEVATION ? 1.5 / c[i] : 1.5;
            want[i] = -(c[i] * wx[i] + k * cx[i] * w[i] + eps * gg * w[i] * wx[i] +
                        mu / 6.0 * std::pow(c[i], 5) * wxxx[i]);
        }
        CHECK(sup_diff(got, want) < 1e-11);
    }
}

TEST_CASE("kdv-top integrating factor is exact on the linear flat problem") {
    Grid g(256, 10.0);
    Spectral sp(g);
    const WaveSpeedField speed = flat_speed(g.n);
    const double mu = 0.1;
    KdvTopSpec spec{KdvVariant::VELOCITY, 0.0, mu};  // eps = 0: linear
    const double k = 4.0 * PI / g.L;
    Field w0(g.n);
    for (int i = 0; i < g.n; ++i) w0[i] = std::sin(k * g.x(i));

    const double T = 2.0;
    Trajectory traj = evolve_kdv_top(w0, spec, speed, sp, T, 0.05);
    // exact phase speed 1 - mu k^2/6
    const double V = 1.0 - mu * k * k / 6.0;
    Field exact(g.n);
    for (int i = 0; i < g.n; ++i) exact[i] = std::sin(k * (g.x(i) - V * T));
    CHECK(sup_diff(traj.states.back(), exact) < 1e-12);
}

TEST_CASE("general evolver converges at fourth order in time") {
    Grid g(128, 15.0);
    Spectral sp(g);
    const WaveSpeedField speed = flat_speed(g.n);
    GeneralModelSpec spec = make_chgbw_spec(speed, 0.3, 0.1);
    Field z0(g.n);
    for (int i = 0; i < g.n; ++i) z0[i] = std::exp(-g.x(i) * g.x(i));

    const double T = 1.0;
    auto final_state = [&](double dt) {
        return evolve_general(z0, spec, speed, sp, T, dt).states.back();
    };
    const Field ref = final_state(0.0025);
    const double e1 = sup_diff(final_state(0.04), ref);
    const double e2 = sup_diff(final_state(0.02), ref);
    const double order = std::log2(e1 / e2);
    CHECK(order > 3.6);
    CHECK(order < 4.6);
}

TEST_CASE("trajectory storage stride and exact rhs cache") {
    Grid g(64, 10.0);
    Spectral sp(g);
    const WaveSpeedField speed = flat_speed(g.n);
    GeneralModelSpec spec = make_chgbw_spec(speed, 0.1, 0.1);
    Field z0(g.n);
    for (int i = 0; i < g.n; ++i) z0[i] = 0.5 * std::exp(-g.x(i) * g.x(i));

    size_t calls = 0;
    const Observer obs = [&](size_t, double, const Field&, const Field&) { ++calls; };
    Trajectory traj = evolve_general(z0, spec, speed, sp, 1.0, 0.05, obs, 4);
    CHECK(traj.size() == 6);  // 20 steps / 4 + initial
    CHECK(traj.dt == doctest::Approx(0.2));
    CHECK(calls == 21);  // observer fires every step incl. t=0
    CHECK(traj.index_at(0.41) == 2);
    // cached rhs at a stored step equals a fresh evaluation
    CHECK(sup_diff(traj.rhs[3], rhs_general(traj.states[3], spec, speed, sp)) == 0.0);
}

TEST_CASE("boussinesq rhs: continuity transcription and elliptic solve residual") {
    Grid g(256, 20.0);
    Spectral sp(g);
    BathymetryProfile prof{BathymetryKind::GAUSSIAN_BUMP, 0.0, 1.0};
    BathymetrySample bath = sample_bathymetry(prof, 0.5, g);
    WaveSpeedField speed = wave_speed(bath, 0.2, g);
    BoussinesqParams par;
    par.eps = 0.1;
    par.mu = 0.08;
    par.beta = 0.2;

    BoussinesqState st;
    st.zeta.resize(g.n);
    st.u.resize(g.n);
    for (int i = 0; i < g.n; ++i) {
        const double x = g.x(i);
        st.zeta[i] = 0.4 * std::exp(-x * x / 2.0);
        st.u[i] = 0.3 * std::exp(-(x - 1.0) * (x - 1.0) / 3.0);
    }
    auto [zeta_t, u_t] = rhs_boussinesq(st, par, speed, bath.b, sp);

    // zeta_t = -d_x(h u), h = 1 + eps zeta - beta b
    Field hu(g.n);
    for (int i = 0; i < g.n; ++i)
        hu[i] = (1.0 + par.eps * st.zeta[i] - par.beta * bath.b[i]) * st.u[i];
    CHECK(sup_diff(zeta_t, -1.0 * oracle_deriv(sp, hu, 1)) < 1e-11);

    // u_t satisfies (1 - (mu/3) c^4 dxx) u_t = -(zeta_x + eps u u_x)
    const Field utxx = oracle_deriv(sp, u_t, 2);
    const Field zx = oracle_deriv(sp, st.zeta, 1);
    const Field ux = oracle_deriv(sp, st.u, 1);
    double res = 0.0;
    for (int i = 0; i < g.n; ++i) {
        const double lhs = u_t[i] - par.mu / 3.0 * std::pow(speed.c[i], 4) * utxx[i];
        res = std::max(res, std::abs(lhs + zx[i] + par.eps * st.u[i] * ux[i]));
    }
    CHECK(res < 1e-10);

    // depth violation reported
    BoussinesqState bad = st;
    for (auto& v : bad.zeta) v = -11.0;
    CHECK_THROWS_AS(rhs_boussinesq(bad, par, speed, bath.b, sp), nonpositive_depth);
}

TEST_CASE("instability guard throws instead of returning garbage") {
    Grid g(64, 2.0);
    Spectral sp(g);
    const WaveSpeedField speed = flat_speed(g.n);
    GeneralModelSpec spec = make_chgbw_spec(speed, 1.0, 1e-6);
    Field z0(g.n);
    for (int i = 0; i < g.n; ++i) z0[i] = 5.0 * std::sin(16.0 * PI * g.x(i) / g.L);
    // wildly unstable dt
    CHECK_THROWS(evolve_general(z0, spec, speed, sp, 50.0, 1.0));
}
