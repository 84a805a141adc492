#ifndef WAVELAB_RECONSTRUCT_HPP
#define WAVELAB_RECONSTRUCT_HPP

#include "params.hpp"
#include "spectral.hpp"

namespace wavelab {

struct reconstruction_singularity : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Maps producing the second unknown from the evolved one. FULL variants keep
/// the secular antiderivative term; HS variants drop it (valid when beta*alpha
/// is small enough that the term is higher order).
enum class ReconVariant {
    CH_ZETA_FROM_U_FULL,
    CH_ZETA_FROM_U_HS,
    CH_U_FROM_ZETA_FULL,
    KDV_U_FROM_ZETA_FULL,
    KDV_U_FROM_ZETA_HS,
    KDV_ZETA_FROM_U_FULL,
    KDV_ZETA_FROM_U_HS,
};

struct ReconstructionSpec {
    ReconVariant variant;
    double eps = 0.0;
    double mu = 0.0;
    double decay_tol = 1e-8;  // left-edge decay guard for the FULL integrals
};

/// w is the evolved unknown (u for *_ZETA_FROM_U, zeta for *_U_FROM_ZETA);
/// w_t must be the exact semidiscrete time derivative from the evolver at the
/// same instant (unused by the KDV variants, which carry no _xt term).
Field reconstruct(const Field& w, const Field& w_t, const ReconstructionSpec& spec,
                  const WaveSpeedField& speed, const Spectral& sp);

/// Exact time derivative of the reconstruction, by differentiating the
/// formula in time. w_tt is required by the CH variants (the c^4 u_xt term);
/// pass an empty field for the KDV variants.
Field reconstruct_dt(const Field& w, const Field& w_t, const Field& w_tt,
                     const ReconstructionSpec& spec, const WaveSpeedField& speed,
                     const Spectral& sp);

// Spec-named wrappers.
inline Field zeta_from_u(const Field& u, const Field& u_t, const ReconstructionSpec& spec,
                         const WaveSpeedField& speed, const Spectral& sp) {
    return reconstruct(u, u_t, spec, speed, sp);
}
inline Field u_from_zeta(const Field& zeta, const Field& zeta_t, const ReconstructionSpec& spec,
                         const WaveSpeedField& speed, const Spectral& sp) {
    return reconstruct(zeta, zeta_t, spec, speed, sp);
}

}  // namespace wavelab

#endif
