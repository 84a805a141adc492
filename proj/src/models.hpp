#ifndef WAVELAB_MODELS_HPP
#define WAVELAB_MODELS_HPP

#include <functional>

#include "coeffs.hpp"
#include "params.hpp"
#include "spectral.hpp"

namespace wavelab {

struct wrong_solver_path : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct instability_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct numerical_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct solver_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// General well-posed class:
///   (1 - mu m d_xx) u_t + c u_x + k c_x u + sum_j eps^j f_j u^j u_x + mu g u_xxx
///     = eps mu [ h1 u u_xxx + (h2 u)_x u_xx + u_x (h2 u)_xx ].
struct GeneralModelSpec {
    double m = 0.0;  // regularization, = -B for the named families
    double k = 0.0;  // transport weight on c_x
    struct FTerm {
        int j;     // power of eps and of u
        Field fj;  // coefficient field f_j(c)
    };
    std::vector<FTerm> f_terms;
    Field g;        // dispersion coefficient
    Field h1, h2;   // nonlinear dispersion coefficients
    double eps = 0.0, mu = 0.0;
};

/// chgeneral as a member of the general class (velocity form, Example 1).
GeneralModelSpec make_velocity_spec(const ConstantCoeffs& cc, const WaveSpeedField& speed,
                                    double eps, double mu);
/// chgeneralzeta as a member of the general class (elevation form, Example 2).
GeneralModelSpec make_elevation_spec(const ConstantCoeffs& cc, const WaveSpeedField& speed,
                                     double eps, double mu);
/// The q=1/12 elevation model with constant coefficient fields; variable c
/// enters only through the transport terms. Used for the breaking study.
GeneralModelSpec make_chgbw_spec(const WaveSpeedField& speed, double eps, double mu);

enum class KdvVariant { ELEVATION, VELOCITY };  // k=1/2, g=3/(2c)  |  k=3/2, g=3/2

struct KdvTopSpec {
    KdvVariant variant = KdvVariant::ELEVATION;
    double eps = 0.0, mu = 0.0;
};

struct BoussinesqParams {
    double eps = 0.0, mu = 0.0, beta = 0.0;
    double elliptic_tol = 1e-12;
    int elliptic_max_iter = 200;
};

struct BoussinesqState {
    Field zeta;
    Field u;
};

Field rhs_general(const Field& u, const GeneralModelSpec& spec, const WaveSpeedField& speed,
                  const Spectral& sp);
Field rhs_kdv_top(const Field& w, const KdvTopSpec& spec, const WaveSpeedField& speed,
                  const Spectral& sp);
/// Returns (zeta_t, u_t); b_alpha is the sampled b^(alpha) so h = 1+eps*zeta-beta*b.
std::pair<Field, Field> rhs_boussinesq(const BoussinesqState& state, const BoussinesqParams& par,
                                       const WaveSpeedField& speed, const Field& b_alpha,
                                       const Spectral& sp);

/// Time-indexed sequence of grid functions with exact semidiscrete time
/// derivatives cached at every stored step.
struct Trajectory {
    double dt = 0.0;
    std::vector<double> times;
    std::vector<Field> states;
    std::vector<Field> rhs;  // u_t at times[i], from the model rhs

    size_t size() const { return times.size(); }
    /// Index of the stored time nearest to t.
    size_t index_at(double t) const;
};

struct BoussinesqTrajectory {
    double dt = 0.0;
    std::vector<double> times;
    std::vector<Field> zeta, u;
    std::vector<Field> zeta_t, u_t;

    size_t size() const { return times.size(); }
};

using Observer = std::function<void(size_t step, double t, const Field& u, const Field& u_t)>;

/// Fourth-order explicit multistage stepping on the m>0 path (Helmholtz
/// inversion folds the u_xxt term into the rhs). Throws wrong_solver_path if
/// spec.m <= 0.
Trajectory evolve_general(const Field& u0, const GeneralModelSpec& spec,
                          const WaveSpeedField& speed, const Spectral& sp, double t_final,
                          double dt, const Observer& obs = nullptr, size_t store_every = 1);

/// Exponential-integrator stepping on the m=0 KdV-top path: the mean parts of
/// the transport and of the (1/6)c^5 dispersion are integrated exactly, the
/// spatial deviation is explicit.
Trajectory evolve_kdv_top(const Field& w0, const KdvTopSpec& spec, const WaveSpeedField& speed,
                          const Spectral& sp, double t_final, double dt,
                          const Observer& obs = nullptr, size_t store_every = 1);

BoussinesqTrajectory evolve_boussinesq(const BoussinesqState& s0, const BoussinesqParams& par,
                                       const WaveSpeedField& speed, const Field& b_alpha,
                                       const Spectral& sp, double t_final, double dt,
                                       size_t store_every = 1);

}  // namespace wavelab

#endif
