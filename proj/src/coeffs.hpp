#ifndef WAVELAB_COEFFS_HPP
#define WAVELAB_COEFFS_HPP

#include <boost/rational.hpp>

#include "params.hpp"

namespace wavelab {

using Rational = boost::rational<long long>;

enum class CoeffFamily { VELOCITY_P, ELEVATION_Q, CUSTOM };

/// BBM-family constants A, B, E, F. Exact rationals when produced from the
/// p/q one-parameter families with rational input; floats only at grid
/// evaluation time.
struct ConstantCoeffs {
    Rational A, B, E, F;
    CoeffFamily family_tag = CoeffFamily::CUSTOM;
    Rational free_param = 0;  // p or q when applicable

    bool linearly_well_posed() const { return B <= Rational(0); }  // B <= 0
    bool regularized() const { return B < Rational(0); }           // m = -B > 0 path
    double m() const { return -boost::rational_cast<double>(B); }
};

struct DerivedAED {
    Rational a, e, d;  // a = B-A, e = E+(3/2)A, d = (1/2)(F+3A-E)
};

/// A=p, B=p-1/6, E=-(3/2)p-1/6, F=-(9/2)p-23/24  (velocity equation family).
ConstantCoeffs coeffs_from_p(const Rational& p);
/// A=q, B=q-1/6, E=-(3/2)q-1/6, F=-(9/2)q-5/24  (elevation equation family).
ConstantCoeffs coeffs_from_q(const Rational& q);
ConstantCoeffs coeffs_custom(const Rational& A, const Rational& B, const Rational& E,
                             const Rational& F);

DerivedAED derived_aed(const ConstantCoeffs& cc);

enum class TildeForm { VELOCITY, ELEVATION };

/// Spatially varying coefficients over a wave-speed field.
/// VELOCITY:  A~ = Ac^5-Bc^5+Bc, E~ = Ec^4-(3/2)Bc^4+(3/2)B,  F~ = Fc^4-(9/2)Bc^4+(9/2)B
/// ELEVATION: same A~,           E~ = Ec^3-(3/2)Bc^3+(3/(2c))B, F~ = Fc^3-(9/2)Bc^3+(9/(2c))B
struct TildeCoeffs {
    Field A_tilde, E_tilde, F_tilde;
    TildeForm form_tag;
};

TildeCoeffs tilde_coeffs(const ConstantCoeffs& cc, const WaveSpeedField& speed, TildeForm form);

/// Pointwise evaluation at a single speed value (used by the coeffs table).
void tilde_at(const ConstantCoeffs& cc, double c, TildeForm form, double out[3]);

/// Parses "-1/12" or "0.25" into an exact rational (decimals get exact
/// power-of-ten denominators).
Rational parse_rational(const std::string& text);

}  // namespace wavelab

#endif
