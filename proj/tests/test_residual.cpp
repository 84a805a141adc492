#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "residual.hpp"

using namespace wavelab;

namespace {
Field gaussian(const Grid& g, double amp, double width, double x0 = 0.0) {
    Field f(g.n);
    for (int i = 0; i < g.n; ++i) {
        const double z = (g.x(i) - x0) / width;
        f[i] = amp * std::exp(-z * z);
    }
    return f;
}

Field rotate(const Field& f, int shift) {
    const int n = (int)f.size();
    Field r(n);
    for (int i = 0; i < n; ++i) r[i] = f[((i - shift) % n + n) % n];
    return r;
}
}  // namespace

TEST_CASE("zero pair gives zero residuals") {
    Grid g(64, 10.0);
    Spectral sp(g);
    WaveSpeedField speed;
    speed.c.assign(g.n, 1.0);
    speed.c_x.assign(g.n, 0.0);
    FieldPairSeries s;
    s.times = {0.0};
    const Field zero(g.n, 0.0);
    s.zeta = {zero};
    s.zeta_t = {zero};
    s.u = {zero};
    s.u_t = {zero};
    const RegimeParams th{0.1, 0.0, 1.0, 0.04};
    ResidualOptions opt{th.mu * th.mu, 2.0};
    const Field b(g.n, 0.0);
    const ResidualReport r1 = gn_residuals(s, th, b, sp, opt);
    CHECK(r1.r1_sup == 0.0);
    CHECK(r1.r2_sup == 0.0);
    const ResidualReport r2 = bouss_residuals(s, th, speed, b, sp, opt);
    CHECK(r2.r1_sup == 0.0);
    CHECK(r2.r2_hs == 0.0);
}

TEST_CASE("manufactured forcing in the continuity equation is recovered") {
    Grid g(256, 20.0);
    Spectral sp(g);
    BathymetrySample bath =
        sample_bathymetry({BathymetryKind::GAUSSIAN_BUMP, 0.0, 1.0}, 0.5, g);
    const RegimeParams th{0.2, 0.15, 0.5, 0.05};
    WaveSpeedField speed = wave_speed(bath, th.beta, g);

    const Field zeta = gaussian(g, 0.4, 1.5, -2.0);
    const Field u = gaussian(g, 0.3, 2.0, 1.0);
    const Field forcing = gaussian(g, 1.0, 1.0, 3.0);

    // zeta_t := -d_x(h u) + mu^2 * forcing  ->  r1 == forcing exactly
    Field hu(g.n);
    for (int i = 0; i < g.n; ++i)
        hu[i] = (1.0 + th.eps * zeta[i] - th.beta * bath.b[i]) * u[i];
    Field zeta_t = -1.0 * sp.derivative(hu, 1);
    for (int i = 0; i < g.n; ++i) zeta_t[i] += th.mu * th.mu * forcing[i];

    FieldPairSeries s;
    s.times = {0.0};
    s.zeta = {zeta};
    s.zeta_t = {zeta_t};
    s.u = {u};
    s.u_t = {gaussian(g, 0.2, 1.0)};
    ResidualOptions opt{th.mu * th.mu, 2.0};
    const ResidualReport rep = gn_residuals(s, th, bath.b, sp, opt);
    CHECK(rep.r1_sup == doctest::Approx(sup_norm(forcing)).epsilon(1e-10));
}

TEST_CASE("momentum residual matches a direct transcription of (GN3)") {
    Grid g(256, 20.0);
    Spectral sp(g);
    BathymetrySample bath =
        sample_bathymetry({BathymetryKind::GAUSSIAN_BUMP, 0.0, 1.0}, 0.5, g);
    const RegimeParams th{0.2, 0.15, 0.5, 0.05};
    WaveSpeedField speed = wave_speed(bath, th.beta, g);

    FieldPairSeries s;
    s.times = {0.0};
    s.zeta = {gaussian(g, 0.4, 1.5, -2.0)};
    s.zeta_t = {gaussian(g, 0.1, 1.0)};
    s.u = {gaussian(g, 0.3, 2.0, 1.0)};
    s.u_t = {gaussian(g, 0.2, 1.4, 0.5)};
    ResidualOptions opt{1.0, 2.0};  // unnormalized for the transcription
    const ResidualReport rep = gn_residuals(s, th, bath.b, sp, opt);

    const Field& zeta = s.zeta[0];
    const Field& u = s.u[0];
    const Field& u_t = s.u_t[0];
    const Field ux = sp.derivative(u, 1);
    const Field uxx = sp.derivative(u, 2);
    const Field uxt = sp.derivative(u_t, 1);
    const Field zx = sp.derivative(zeta, 1);
    Field inner(g.n);
    for (int i = 0; i < g.n; ++i) {
        const double h = 1.0 + th.eps * zeta[i] - th.beta * bath.b[i];
        inner[i] = h * h * h * (uxt[i] + th.eps * (u[i] * uxx[i] - ux[i] * ux[i]));
    }
    const Field dx_inner = sp.derivative(inner, 1);
    double want = 0.0;
    for (int i = 0; i < g.n; ++i) {
        const double h = 1.0 + th.eps * zeta[i] - th.beta * bath.b[i];
        want = std::max(want, std::abs(u_t[i] + zx[i] + th.eps * u[i] * ux[i] -
                                       th.mu / (3.0 * h) * dx_inner[i]));
    }
    CHECK(rep.r2_sup == doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("residuals are invariant under periodic translation") {
    Grid g(128, 15.0);
    Spectral sp(g);
    // speed field must translate with the data: build it from a shifted profile
    const int shift = 17;
    BathymetrySample bath =
        sample_bathymetry({BathymetryKind::SINUSOID, 0.0, 1.0}, 2.0 * Grid::pi() / 15.0, g);
    const RegimeParams th{0.15, 0.1, 1.0, 0.06};
    WaveSpeedField speed = wave_speed(bath, th.beta, g);

    FieldPairSeries a;
    a.times = {0.0};
    a.zeta = {gaussian(g, 0.4, 1.5, -2.0)};
    a.zeta_t = {gaussian(g, 0.1, 1.0)};
    a.u = {gaussian(g, 0.3, 2.0, 1.0)};
    a.u_t = {gaussian(g, 0.2, 1.4, 0.5)};

    FieldPairSeries b;
    b.times = {0.0};
    b.zeta = {rotate(a.zeta[0], shift)};
    b.zeta_t = {rotate(a.zeta_t[0], shift)};
    b.u = {rotate(a.u[0], shift)};
    b.u_t = {rotate(a.u_t[0], shift)};
    BathymetrySample bath_s;
    bath_s.b = rotate(bath.b, shift);
    WaveSpeedField speed_s;
    speed_s.c = rotate(speed.c, shift);
    speed_s.c_x = rotate(speed.c_x, shift);

    ResidualOptions opt{th.mu * th.mu, 2.0};
    const ResidualReport ra = gn_residuals(a, th, bath.b, sp, opt);
    const ResidualReport rb = gn_residuals(b, th, bath_s.b, sp, opt);
    CHECK(ra.r1_sup == doctest::Approx(rb.r1_sup).epsilon(1e-10));
    CHECK(ra.r2_sup == doctest::Approx(rb.r2_sup).epsilon(1e-10));

    const ResidualReport ba = bouss_residuals(a, th, speed, bath.b, sp, opt);
    const ResidualReport bb = bouss_residuals(b, th, speed_s, bath_s.b, sp, opt);
    CHECK(ba.r2_sup == doctest::Approx(bb.r2_sup).epsilon(1e-10));
}

TEST_CASE("gn and bouss momentum residuals approach each other as mu shrinks") {
    // (BOUSS) is (GN3) minus O(mu^2) terms; with eps = mu their r2 difference
    // contracts ~4x when mu halves.
    double diffs[2];
    int k = 0;
    for (double mu : {0.04, 0.02}) {
        Grid g(128, 15.0);
        Spectral sp(g);
        const RegimeParams th{mu, 0.0, 1.0, mu};
        WaveSpeedField speed;
        speed.c.assign(g.n, 1.0);
        speed.c_x.assign(g.n, 0.0);
        const Field b(g.n, 0.0);
        FieldPairSeries s;
        s.times = {0.0};
        s.zeta = {gaussian(g, 0.5, 1.5)};
        s.zeta_t = {gaussian(g, 0.2, 1.2, 1.0)};
        s.u = {gaussian(g, 0.5, 1.5)};
        s.u_t = {gaussian(g, 0.3, 1.8, -1.0)};
        ResidualOptions opt{1.0, 2.0};
        const ResidualReport rg = gn_residuals(s, th, b, sp, opt);
        const ResidualReport rb = bouss_residuals(s, th, speed, b, sp, opt);
        diffs[k++] = std::abs(rg.r2_sup - rb.r2_sup);
    }
    CHECK(diffs[0] > 0.0);
    // O(mu^2) bound: at least ~4x contraction (faster is fine)
    CHECK(std::log2(diffs[0] / diffs[1]) > 1.4);
}

TEST_CASE("order fit on synthetic power laws") {
    std::vector<double> mus = {0.08, 0.04, 0.02, 0.01};
    std::vector<double> quad, lin;
    for (double m : mus) {
        quad.push_back(3.7 * m * m);
        lin.push_back(0.9 * m);
    }
    CHECK(order_fit(mus, quad).slope == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(order_fit(mus, lin).slope == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(order_fit(mus, quad).correlation == doctest::Approx(1.0).epsilon(1e-10));

    CHECK_THROWS_AS(order_fit({0.1, 0.2}, {1.0, 2.0}), invalid_input);
    CHECK_THROWS_AS(order_fit({0.1, 0.1, 0.1}, {1.0, 2.0, 3.0}), invalid_input);
    CHECK_THROWS_AS(order_fit({0.1, 0.2, -0.3}, {1.0, 2.0, 3.0}), invalid_input);
}

TEST_CASE("model error series") {
    Grid g(64, 10.0);
    FieldPairSeries a, b;
    a.times = b.times = {0.0, 1.0};
    const Field f1 = gaussian(g, 0.5, 1.0), f2 = gaussian(g, 0.4, 2.0);
    const Field zero(g.n, 0.0);
    a.zeta = {f1, f2};
    a.u = {f2, f1};
    a.zeta_t = a.u_t = {zero, zero};
    b = a;
    const ModelErrorSeries same = model_error_series(a, b);
    CHECK(same.zeta_sup[0] == 0.0);
    CHECK(same.u_sup[1] == 0.0);

    for (auto& v : b.zeta[1]) v += 0.25;
    CHECK(model_error_series(a, b).zeta_sup[1] == doctest::Approx(0.25));

    FieldPairSeries c = a;
    Grid g2(128, 10.0);
    c.zeta[0] = Field(g2.n, 0.0);
    CHECK_THROWS_AS(model_error_series(a, c), invalid_input);
}
