#include "coeffs.hpp"

#include <cmath>

namespace wavelab {

namespace {
const Rational kSixth(1, 6);
}

ConstantCoeffs coeffs_from_p(const Rational& p) {
    ConstantCoeffs cc;
    cc.A = p;
    cc.B = p - kSixth;
    cc.E = Rational(-3, 2) * p - kSixth;
    cc.F = Rational(-9, 2) * p - Rational(23, 24);
    cc.family_tag = CoeffFamily::VELOCITY_P;
    cc.free_param = p;
    return cc;
}

ConstantCoeffs coeffs_from_q(const Rational& q) {
    ConstantCoeffs cc;
    cc.A = q;
    cc.B = q - kSixth;
    cc.E = Rational(-3, 2) * q - kSixth;
    cc.F = Rational(-9, 2) * q - Rational(5, 24);
    cc.family_tag = CoeffFamily::ELEVATION_Q;
    cc.free_param = q;
    return cc;
}

ConstantCoeffs coeffs_custom(const Rational& A, const Rational& B, const Rational& E,
                             const Rational& F) {
    ConstantCoeffs cc;
    cc.A = A;
    cc.B = B;
    cc.E = E;
    cc.F = F;
    cc.family_tag = CoeffFamily::CUSTOM;
    return cc;
}

DerivedAED derived_aed(const ConstantCoeffs& cc) {
    DerivedAED d;
    d.a = cc.B - cc.A;
    d.e = cc.E + Rational(3, 2) * cc.A;
    d.d = Rational(1, 2) * (cc.F + Rational(3) * cc.A - cc.E);
    return d;
}

void tilde_at(const ConstantCoeffs& cc, double c, TildeForm form, double out[3]) {
    const double A = boost::rational_cast<double>(cc.A);
    const double B = boost::rational_cast<double>(cc.B);
    const double E = boost::rational_cast<double>(cc.E);
    const double F = boost::rational_cast<double>(cc.F);
    const double c2 = c * c, c3 = c2 * c, c4 = c3 * c, c5 = c4 * c;
    out[0] = A * c5 - B * c5 + B * c;
    if (form == TildeForm::VELOCITY) {
        out[1] = E * c4 - 1.5 * B * c4 + 1.5 * B;
        out[2] = F * c4 - 4.5 * B * c4 + 4.5 * B;
    } else {
        out[1] = E * c3 - 1.5 * B * c3 + 1.5 * B / c;
        out[2] = F * c3 - 4.5 * B * c3 + 4.5 * B / c;
    }
}

TildeCoeffs tilde_coeffs(const ConstantCoeffs& cc, const WaveSpeedField& speed, TildeForm form) {
    TildeCoeffs tc;
    tc.form_tag = form;
    const size_t n = speed.c.size();
    tc.A_tilde.resize(n);
    tc.E_tilde.resize(n);
    tc.F_tilde.resize(n);
    double v[3];
    for (size_t i = 0; i < n; ++i) {
        tilde_at(cc, speed.c[i], form, v);
        tc.A_tilde[i] = v[0];
        tc.E_tilde[i] = v[1];
        tc.F_tilde[i] = v[2];
    }
    return tc;
}

Rational parse_rational(const std::string& text) {
    std::string s = text;
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        const long long num = std::stoll(s.substr(0, slash));
        const long long den = std::stoll(s.substr(slash + 1));
        return Rational(num, den);
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) return Rational(std::stoll(s));
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    long long den = 1;
    for (size_t i = dot + 1; i < s.size(); ++i) den *= 10;
    return Rational(std::stoll(digits), den);
}

}  // namespace wavelab
