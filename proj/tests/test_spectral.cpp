#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "spectral.hpp"

using namespace wavelab;

namespace {
const double PI = Grid::pi();

Field sampled(const Grid& g, double (*fn)(double)) {
    Field f(g.n);
    for (int i = 0; i < g.n; ++i) f[i] = fn(g.x(i));
    return f;
}
}  // namespace

TEST_CASE("grid validation") {
    CHECK_THROWS(Grid(100, 10.0));  // not a power of two
    CHECK_THROWS(Grid(8, 10.0));    // too small
    CHECK_THROWS(Grid(64, -1.0));
    Grid g(64, 10.0);
    CHECK(g.dx() == doctest::Approx(20.0 / 64));
    CHECK(g.x(0) == -10.0);
    CHECK(g.k(1) == doctest::Approx(PI / 10.0));
}

TEST_CASE("trigonometric derivatives are exact on modes") {
    Grid g(128, 5.0);
    Spectral sp(g);
    const double k = 3.0 * PI / g.L;
    Field f(g.n), d1(g.n), d2(g.n), d3(g.n), d4(g.n);
    for (int i = 0; i < g.n; ++i) {
        const double x = g.x(i);
        f[i] = std::sin(k * x);
        d1[i] = k * std::cos(k * x);
        d2[i] = -k * k * std::sin(k * x);
        d3[i] = -k * k * k * std::cos(k * x);
        d4[i] = k * k * k * k * std::sin(k * x);
    }
    CHECK(sup_diff(sp.derivative(f, 1), d1) < 1e-12);
    CHECK(sup_diff(sp.derivative(f, 2), d2) < 1e-11);
    CHECK(sup_diff(sp.derivative(f, 3), d3) < 1e-10);
    CHECK(sup_diff(sp.derivative(f, 4), d4) < 1e-9);
    CHECK_THROWS(sp.derivative(f, 5));
}

TEST_CASE("helmholtz solve inverts (1 - kappa dxx)") {
    Grid g(256, 8.0);
    Spectral sp(g);
    const double kap = 0.37;
    Field w = sampled(g, [](double x) { return std::exp(-x * x); });
    Field f = w - kap * sp.derivative(w, 2);
    CHECK(sup_diff(sp.helmholtz_solve(f, kap), w) < 1e-12);
    // kappa = 0 is the identity
    CHECK(sup_diff(sp.helmholtz_solve(w, 0.0), w) < 1e-14);
    CHECK_THROWS(sp.helmholtz_solve(w, -1.0));
}

TEST_CASE("antiderivative anchored at the left edge") {
    Grid g(512, 20.0);
    Spectral sp(g);
    // f = g'(x) for g = exp(-x^2): antiderivative is g(x) - g(-L) ~ g(x).
    Field f(g.n), F(g.n);
    for (int i = 0; i < g.n; ++i) {
        const double x = g.x(i);
        f[i] = -2.0 * x * std::exp(-x * x);
        F[i] = std::exp(-x * x);
    }
    CHECK(sup_diff(sp.antiderivative_from_left(f), F) < 1e-10);

    // nonzero mean: int_{-L}^{x} of a one-signed bump grows to its mass
    Field bump = sampled(g, [](double x) { return std::exp(-x * x); });
    Field Ib = sp.antiderivative_from_left(bump);
    CHECK(Ib.front() == doctest::Approx(0.0).epsilon(1e-8));
    CHECK(Ib.back() == doctest::Approx(std::sqrt(PI)).epsilon(1e-8));

    // decay guard: cos does not vanish near the left edge
    Field c = sampled(g, [](double x) { return std::cos(PI * x / 20.0); });
    CHECK_THROWS_AS((void)sp.antiderivative_from_left(c), domain_error_small);
}

TEST_CASE("quadrature and inner products") {
    Grid g(128, 3.0);
    Spectral sp(g);
    Field one(g.n, 1.0);
    CHECK(sp.integrate(one) == doctest::Approx(2.0 * g.L));
    const double k = 2.0 * PI / g.L;
    Field s(g.n);
    for (int i = 0; i < g.n; ++i) s[i] = std::sin(k * g.x(i));
    CHECK(sp.integrate(s * s) == doctest::Approx(g.L).epsilon(1e-12));
    CHECK(sp.l2_inner(s, one) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("hs norm matches the analytic value on a single mode") {
    Grid g(256, 6.0);
    Spectral sp(g);
    const double k = 4.0 * PI / g.L;
    Field s(g.n);
    for (int i = 0; i < g.n; ++i) s[i] = std::sin(k * g.x(i));
    // |sin(kx)|_{H^s}^2 = L (1+k^2)^s on [-L, L)
    for (double sv : {0.0, 1.0, 2.5}) {
        const double expected = std::sqrt(g.L * std::pow(1.0 + k * k, sv));
        CHECK(sp.hs_norm(s, sv) == doctest::Approx(expected).epsilon(1e-12));
    }
    // X^{s+1}: |f|_{H^s}^2 + mu*m |f_x|_{H^s}^2
    NormSpec ns{1.0, 0.04, 0.25};
    const double expected =
        std::sqrt(g.L * std::pow(1.0 + k * k, 1.0) * (1.0 + ns.mu * ns.m * k * k));
    CHECK(sp.xs_norm(s, ns) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("dealiased product kills the aliased mode") {
    Grid g(64, PI);  // k_j = j
    Spectral sp(g);
    // j = 30 squared aliases onto j = 64-60 = 4 in plain collocation.
    Field f(g.n);
    for (int i = 0; i < g.n; ++i) f[i] = std::cos(30.0 * g.x(i));
    auto plain = sp.forward(f * f);
    auto deal = sp.forward(sp.dealiased_product(f, f));
    CHECK(std::abs(plain[4]) > 0.2);           // aliasing visible (cos amplitude 1/2)
    CHECK(std::abs(deal[4]) < 1e-13);          // removed
    // low-frequency products are untouched: j=3 squared -> j=0 and j=6
    Field lo(g.n);
    for (int i = 0; i < g.n; ++i) lo[i] = std::cos(3.0 * g.x(i));
    CHECK(sup_diff(sp.dealiased_product(lo, lo), lo * lo) < 1e-13);
}

TEST_CASE("round trip forward/inverse") {
    Grid g(128, 7.0);
    Spectral sp(g);
    Field f = sampled(g, [](double x) { return std::exp(-0.3 * x * x) * std::sin(x); });
    CHECK(sup_diff(sp.inverse(sp.forward(f)), f) < 1e-14);
}
