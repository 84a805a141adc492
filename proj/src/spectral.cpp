#include "spectral.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <cstring>

namespace wavelab {

double Grid::pi() { return 3.14159265358979323846; }

Grid::Grid(int n_points, double half_length) : n(n_points), L(half_length) {
    if (n < 16 || (n & (n - 1)) != 0)
        throw std::invalid_argument("Grid: n must be a power of two >= 16");
    if (!(L > 0.0)) throw std::invalid_argument("Grid: L must be positive");
}

struct Spectral::Impl {
    int n, nc;
    double* real_buf;
    fftw_complex* cplx_buf;
    fftw_plan fwd;
    fftw_plan bwd;
};

Spectral::Spectral(Grid grid) : grid_(grid), impl_(new Impl) {
    impl_->n = grid_.n;
    impl_->nc = grid_.n / 2 + 1;
    impl_->real_buf = fftw_alloc_real(impl_->n);
    impl_->cplx_buf = fftw_alloc_complex(impl_->nc);
    impl_->fwd = fftw_plan_dft_r2c_1d(impl_->n, impl_->real_buf, impl_->cplx_buf, FFTW_ESTIMATE);
    impl_->bwd = fftw_plan_dft_c2r_1d(impl_->n, impl_->cplx_buf, impl_->real_buf, FFTW_ESTIMATE);
}

Spectral::~Spectral() {
    if (!impl_) return;  // moved-from
    fftw_destroy_plan(impl_->bwd);
    fftw_destroy_plan(impl_->fwd);
    fftw_free(impl_->cplx_buf);
    fftw_free(impl_->real_buf);
}

Spectral::Spectral(Spectral&&) noexcept = default;
Spectral& Spectral::operator=(Spectral&&) noexcept = default;

std::vector<std::complex<double>> Spectral::forward(const Field& f) const {
    if ((int)f.size() != impl_->n) throw std::invalid_argument("Spectral: field size mismatch");
    std::memcpy(impl_->real_buf, f.data(), impl_->n * sizeof(double));
    fftw_execute(impl_->fwd);
    std::vector<std::complex<double>> fh(impl_->nc);
    const double ninv = 1.0 / impl_->n;
    for (int j = 0; j < impl_->nc; ++j)
        fh[j] = std::complex<double>(impl_->cplx_buf[j][0], impl_->cplx_buf[j][1]) * ninv;
    return fh;
}

Field Spectral::inverse(const std::vector<std::complex<double>>& fh) const {
    if ((int)fh.size() != impl_->nc) throw std::invalid_argument("Spectral: spectrum size mismatch");
    for (int j = 0; j < impl_->nc; ++j) {
        impl_->cplx_buf[j][0] = fh[j].real();
        impl_->cplx_buf[j][1] = fh[j].imag();
    }
    fftw_execute(impl_->bwd);
    Field f(impl_->n);
    std::memcpy(f.data(), impl_->real_buf, impl_->n * sizeof(double));
    return f;
}

Field Spectral::derivative(const Field& f, int order) const {
    if (order < 1 || order > 4) throw std::invalid_argument("derivative: order must be 1..4");
    auto fh = forward(f);
    const std::complex<double> i1(0.0, 1.0);
    for (int j = 0; j < (int)fh.size(); ++j) {
        const std::complex<double> ik = i1 * grid_.k(j);
        std::complex<double> sym = 1.0;
        for (int o = 0; o < order; ++o) sym *= ik;
        fh[j] *= sym;
    }
    if (order % 2 == 1) fh.back() = 0.0;  // Nyquist
    return inverse(fh);
}

Field Spectral::helmholtz_solve(const Field& f, double kappa) const {
    if (kappa < 0.0) throw std::invalid_argument("helmholtz_solve: kappa must be >= 0");
    auto fh = forward(f);
    for (int j = 0; j < (int)fh.size(); ++j) {
        const double k = grid_.k(j);
        fh[j] /= (1.0 + kappa * k * k);
    }
    return inverse(fh);
}

Field Spectral::antiderivative_from_left(const Field& f, double decay_tol) const {
    const int edge = std::max(1, grid_.n / 20);
    for (int i = 0; i < edge; ++i)
        if (std::abs(f[i]) > decay_tol)
            throw domain_error_small(
                "antiderivative_from_left: integrand does not decay at the left edge; "
                "enlarge the domain");
    auto fh = forward(f);
    const double mean = fh[0].real();
    const std::complex<double> i1(0.0, 1.0);
    fh[0] = 0.0;
    for (int j = 1; j < (int)fh.size(); ++j) fh[j] /= (i1 * grid_.k(j));
    fh.back() = 0.0;
    Field per = inverse(fh);
    Field out(grid_.n);
    const double p0 = per[0];
    for (int i = 0; i < grid_.n; ++i) out[i] = per[i] - p0 + mean * (grid_.x(i) + grid_.L);
    return out;
}

double Spectral::integrate(const Field& f) const {
    double s = 0.0;
    for (double v : f) s += v;
    return s * grid_.dx();
}

double Spectral::l2_inner(const Field& f, const Field& g) const {
    double s = 0.0;
    for (int i = 0; i < grid_.n; ++i) s += f[i] * g[i];
    return s * grid_.dx();
}

double Spectral::hs_norm(const Field& f, double s) const {
    auto fh = forward(f);
    // Parseval: int |f|^2 = 2L * sum over all modes |fh|^2 (conjugate pairs doubled).
    double acc = 0.0;
    for (int j = 0; j < (int)fh.size(); ++j) {
        const double k = grid_.k(j);
        const double w = std::pow(1.0 + k * k, s);
        double m2 = std::norm(fh[j]);
        if (j > 0 && j < (int)fh.size() - 1) m2 *= 2.0;
        acc += w * m2;
    }
    return std::sqrt(2.0 * grid_.L * acc);
}

double Spectral::xs_norm(const Field& f, const NormSpec& spec) const {
    const double h = hs_norm(f, spec.s);
    const double hx = hs_norm(derivative(f, 1), spec.s);
    return std::sqrt(h * h + spec.mu * spec.m * hx * hx);
}

Field Spectral::dealias(const Field& f) const {
    auto fh = forward(f);
    const int cutoff = grid_.n / 3;  // keep |j| <= n/3
    for (int j = cutoff + 1; j < (int)fh.size(); ++j) fh[j] = 0.0;
    return inverse(fh);
}

Field Spectral::dealiased_product(const Field& f, const Field& g) const {
    return dealias(dealias(f) * dealias(g));
}

Field operator+(const Field& a, const Field& b) {
    Field r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}
Field operator-(const Field& a, const Field& b) {
    Field r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}
Field operator*(const Field& a, const Field& b) {
    Field r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * b[i];
    return r;
}
Field operator*(double a, const Field& b) {
    Field r(b.size());
    for (size_t i = 0; i < b.size(); ++i) r[i] = a * b[i];
    return r;
}
Field& operator+=(Field& a, const Field& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}
double sup_norm(const Field& f) {
    double m = 0.0;
    for (double v : f) m = std::max(m, std::abs(v));
    return m;
}
double sup_diff(const Field& a, const Field& b) {
    double m = 0.0;
    for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

}  // namespace wavelab
