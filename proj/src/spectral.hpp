#ifndef WAVELAB_SPECTRAL_HPP
#define WAVELAB_SPECTRAL_HPP

#include <complex>
#include <memory>
#include <stdexcept>
#include <vector>

namespace wavelab {

using Field = std::vector<double>;

struct domain_error_small : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Uniform periodic grid on [-L, L). n must be a power of two, n >= 16.
struct Grid {
    int n;
    double L;

    Grid(int n_points, double half_length);
    double dx() const { return 2.0 * L / n; }
    double x(int i) const { return -L + i * dx(); }
    /// Wavenumber of (real-FFT) mode j, j = 0..n/2.
    double k(int j) const { return j * pi() / L; }
    static double pi();
};

/// Sobolev/energy norm parameters: |f|^2_{X^{s+1}} = |f|^2_{H^s} + mu*m |f_x|^2_{H^s}.
struct NormSpec {
    double s = 0.0;
    double mu = 0.0;
    double m = 0.0;
};

/// FFT-backed spectral operations on one grid. Plans are created once and
/// reused; all entry points leave the workspace in a consistent state so a
/// const Spectral can be shared (single-threaded use per instance).
class Spectral {
  public:
    explicit Spectral(Grid grid);
    ~Spectral();
    Spectral(const Spectral&) = delete;
    Spectral& operator=(const Spectral&) = delete;
    Spectral(Spectral&&) noexcept;
    Spectral& operator=(Spectral&&) noexcept;

    const Grid& grid() const { return grid_; }

    /// Trigonometric-interpolation derivative, order 1..4. Nyquist mode is
    /// zeroed for odd orders.
    Field derivative(const Field& f, int order = 1) const;

    /// Solves (1 - kappa d_xx) w = f, kappa >= 0.
    Field helmholtz_solve(const Field& f, double kappa) const;

    /// x -> integral_{-L}^{x} f, spectral accuracy, anchored to 0 at x=-L.
    /// Checks that |f| over the leftmost 5% of nodes stays below decay_tol;
    /// throws domain_error_small otherwise (the -inf truncation is invalid).
    Field antiderivative_from_left(const Field& f, double decay_tol = 1e-8) const;

    /// Periodic quadrature of f (trapezoid == spectral on periodic data).
    double integrate(const Field& f) const;

    double l2_inner(const Field& f, const Field& g) const;
    double hs_norm(const Field& f, double s) const;
    double xs_norm(const Field& f, const NormSpec& spec) const;

    /// Dealiased pointwise product (2/3 rule applied to both factors).
    Field dealiased_product(const Field& f, const Field& g) const;
    /// Zeroes the upper third of the spectrum.
    Field dealias(const Field& f) const;

    std::vector<std::complex<double>> forward(const Field& f) const;
    Field inverse(const std::vector<std::complex<double>>& fh) const;

  private:
    Grid grid_;
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

Field operator+(const Field& a, const Field& b);
Field operator-(const Field& a, const Field& b);
Field operator*(const Field& a, const Field& b);
Field operator*(double a, const Field& b);
Field& operator+=(Field& a, const Field& b);
double sup_norm(const Field& f);
double sup_diff(const Field& a, const Field& b);

}  // namespace wavelab

#endif
