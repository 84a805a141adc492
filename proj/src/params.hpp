#ifndef WAVELAB_PARAMS_HPP
#define WAVELAB_PARAMS_HPP

#include <string>
#include <vector>

#include "spectral.hpp"

namespace wavelab {

struct invalid_input : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct nonpositive_depth : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Nondimensional parameter quadruple (eps, beta, alpha, mu).
struct RegimeParams {
    double eps;    // nonlinearity, > 0
    double beta;   // topography amplitude, >= 0
    double alpha;  // topography wavelength ratio, > 0
    double mu;     // shallowness, 0 < mu <= 1

    void validate() const;
};

enum class RegimeTag { CH_CONSISTENCY, KDV_CONSISTENCY, CH_JUSTIFIED, KDV_JUSTIFIED };

struct RegimeFamily {
    std::vector<RegimeParams> members;
    RegimeTag tag = RegimeTag::CH_CONSISTENCY;
    double bound_constant = 1.0;  // K in the O(.) ratio checks
};

struct RegimeDiagnostics {
    struct Relation {
        std::string name;   // e.g. "eps = O(sqrt(mu))"
        double worst_ratio; // max over members of lhs/rhs
        bool pass;
    };
    std::vector<Relation> relations;
    bool pass = true;
};

/// Checks each O(.) relation of the tagged regime as a ratio bound over the family.
RegimeDiagnostics check_regime(const RegimeFamily& family);

const char* regime_tag_name(RegimeTag tag);

enum class BathymetryKind { FLAT, GAUSSIAN_BUMP, SMOOTH_STEP, SINUSOID };

/// Smooth normalized bottom profile, sup|b| = 1 (b == 0 for FLAT).
/// center and width are in the slow variable y = alpha*x.
struct BathymetryProfile {
    BathymetryKind kind = BathymetryKind::FLAT;
    double center = 0.0;
    double width = 1.0;

    /// d^order/dy^order b(y), order 0..3, exact closed form.
    double eval(double y, int order = 0) const;
};

/// b(alpha x) and its first three x-derivatives (chain rule, exact).
struct BathymetrySample {
    Field b;       // b^(alpha)
    Field b_x;
    Field b_xx;
    Field b_xxx;
};

BathymetrySample sample_bathymetry(const BathymetryProfile& profile, double alpha,
                                   const Grid& grid);

/// c(x) = sqrt(1 - beta b^(alpha)) with exact analytic derivatives.
struct WaveSpeedField {
    Field c;
    Field c_x;
    Field c_xx;
    Field c_xxx;
    double c0_floor = 1.0;  // min of c, > 0

    bool flat() const { return c0_floor == 1.0 && sup_norm(c_x) == 0.0; }
};

/// Throws nonpositive_depth (naming the worst point) if 1 - beta*b < c0_min^2 anywhere.
WaveSpeedField wave_speed(const BathymetrySample& bath, double beta, const Grid& grid,
                          double c0_min = 1e-6);

}  // namespace wavelab

#endif
