#include "params.hpp"

#include <cmath>
#include <sstream>

namespace wavelab {

void RegimeParams::validate() const {
    if (!(eps > 0.0)) throw invalid_input("RegimeParams: eps must be > 0");
    if (beta < 0.0) throw invalid_input("RegimeParams: beta must be >= 0");
    if (!(alpha > 0.0)) throw invalid_input("RegimeParams: alpha must be > 0");
    if (!(mu > 0.0 && mu <= 1.0)) throw invalid_input("RegimeParams: mu must be in (0, 1]");
}

const char* regime_tag_name(RegimeTag tag) {
    switch (tag) {
        case RegimeTag::CH_CONSISTENCY: return "ch_consistency";
        case RegimeTag::KDV_CONSISTENCY: return "kdv_consistency";
        case RegimeTag::CH_JUSTIFIED: return "ch_justified";
        case RegimeTag::KDV_JUSTIFIED: return "kdv_justified";
    }
    return "?";
}

namespace {
struct Rel {
    const char* name;
    double (*lhs)(const RegimeParams&);
    double (*rhs)(const RegimeParams&);
};

double ba(const RegimeParams& t) { return t.beta * t.alpha; }

const Rel kChConsistency[] = {
    {"eps=O(sqrt(mu))", [](const RegimeParams& t) { return t.eps; },
     [](const RegimeParams& t) { return std::sqrt(t.mu); }},
    {"beta*alpha=O(eps)", ba, [](const RegimeParams& t) { return t.eps; }},
    {"beta*alpha=O(mu)", ba, [](const RegimeParams& t) { return t.mu; }},
    {"beta*alpha^2=O(mu^2)", [](const RegimeParams& t) { return t.beta * t.alpha * t.alpha; },
     [](const RegimeParams& t) { return t.mu * t.mu; }},
    {"beta*alpha*eps=O(mu^2)", [](const RegimeParams& t) { return ba(t) * t.eps; },
     [](const RegimeParams& t) { return t.mu * t.mu; }},
};
const Rel kKdvConsistency[] = {
    {"eps=O(mu)", [](const RegimeParams& t) { return t.eps; },
     [](const RegimeParams& t) { return t.mu; }},
    {"beta*alpha=O(eps)", ba, [](const RegimeParams& t) { return t.eps; }},
    {"beta*alpha^2=O(eps^2)", [](const RegimeParams& t) { return t.beta * t.alpha * t.alpha; },
     [](const RegimeParams& t) { return t.eps * t.eps; }},
};
const Rel kChJustified[] = {
    {"eps=O(sqrt(mu))", [](const RegimeParams& t) { return t.eps; },
     [](const RegimeParams& t) { return std::sqrt(t.mu); }},
    {"beta*alpha=O(eps)", ba, [](const RegimeParams& t) { return t.eps; }},
    {"beta*alpha=O(mu^2)", ba, [](const RegimeParams& t) { return t.mu * t.mu; }},
};
const Rel kKdvJustified[] = {
    {"eps=O(mu)", [](const RegimeParams& t) { return t.eps; },
     [](const RegimeParams& t) { return t.mu; }},
    {"beta*alpha=O(eps^2)", ba, [](const RegimeParams& t) { return t.eps * t.eps; }},
};
}  // namespace

RegimeDiagnostics check_regime(const RegimeFamily& family) {
    if (family.members.empty()) throw invalid_input("check_regime: empty family");
    for (const auto& t : family.members) t.validate();

    const Rel* rels = nullptr;
    size_t n = 0;
    switch (family.tag) {
        case RegimeTag::CH_CONSISTENCY: rels = kChConsistency; n = std::size(kChConsistency); break;
        case RegimeTag::KDV_CONSISTENCY: rels = kKdvConsistency; n = std::size(kKdvConsistency); break;
        case RegimeTag::CH_JUSTIFIED: rels = kChJustified; n = std::size(kChJustified); break;
        case RegimeTag::KDV_JUSTIFIED: rels = kKdvJustified; n = std::size(kKdvJustified); break;
    }

    RegimeDiagnostics diag;
    for (size_t r = 0; r < n; ++r) {
        double worst = 0.0;
        for (const auto& t : family.members)
            worst = std::max(worst, rels[r].lhs(t) / rels[r].rhs(t));
        const bool pass = worst <= family.bound_constant;
        diag.relations.push_back({rels[r].name, worst, pass});
        diag.pass = diag.pass && pass;
    }
    return diag;
}

double BathymetryProfile::eval(double y, int order) const {
    const double z = (y - center) / width;
    const double wi = 1.0 / width;
    switch (kind) {
        case BathymetryKind::FLAT:
            return 0.0;
        case BathymetryKind::GAUSSIAN_BUMP: {
            const double g = std::exp(-z * z);
            switch (order) {
                case 0: return g;
                case 1: return -2.0 * z * g * wi;
                case 2: return (4.0 * z * z - 2.0) * g * wi * wi;
                case 3: return (-8.0 * z * z * z + 12.0 * z) * g * wi * wi * wi;
            }
            break;
        }
        case BathymetryKind::SMOOTH_STEP: {
            const double t = std::tanh(z);
            const double s = 1.0 - t * t;  // sech^2
            switch (order) {
                case 0: return t;
                case 1: return s * wi;
                case 2: return -2.0 * t * s * wi * wi;
                case 3: return s * (6.0 * t * t - 2.0) * wi * wi * wi;
            }
            break;
        }
        case BathymetryKind::SINUSOID: {
            // b(y) = sin(y - center); width unused so that sup|b| = 1 exactly.
            const double yy = y - center;
            switch (order) {
                case 0: return std::sin(yy);
                case 1: return std::cos(yy);
                case 2: return -std::sin(yy);
                case 3: return -std::cos(yy);
            }
            break;
        }
    }
    throw invalid_input("BathymetryProfile::eval: order must be 0..3");
}

BathymetrySample sample_bathymetry(const BathymetryProfile& profile, double alpha,
                                   const Grid& grid) {
    BathymetrySample s;
    s.b.resize(grid.n);
    s.b_x.resize(grid.n);
    s.b_xx.resize(grid.n);
    s.b_xxx.resize(grid.n);
    for (int i = 0; i < grid.n; ++i) {
        const double y = alpha * grid.x(i);
        s.b[i] = profile.eval(y, 0);
        s.b_x[i] = alpha * profile.eval(y, 1);
        s.b_xx[i] = alpha * alpha * profile.eval(y, 2);
        s.b_xxx[i] = alpha * alpha * alpha * profile.eval(y, 3);
    }
    return s;
}

WaveSpeedField wave_speed(const BathymetrySample& bath, double beta, const Grid& grid,
                          double c0_min) {
    WaveSpeedField w;
    const int n = grid.n;
    w.c.resize(n);
    w.c_x.resize(n);
    w.c_xx.resize(n);
    w.c_xxx.resize(n);
    w.c0_floor = std::numeric_limits<double>::max();
    for (int i = 0; i < n; ++i) {
        const double depth = 1.0 - beta * bath.b[i];
        if (depth < c0_min * c0_min) {
            std::ostringstream os;
            os << "wave_speed: nonpositive depth, 1 - beta*b = " << depth << " at x = "
               << grid.x(i) << " (floor " << c0_min * c0_min << ")";
            throw nonpositive_depth(os.str());
        }
        const double c = std::sqrt(depth);
        const double B1 = beta * bath.b_x[i];
        const double B2 = beta * bath.b_xx[i];
        const double B3 = beta * bath.b_xxx[i];
        const double c3 = c * c * c, c5 = c3 * c * c;
        w.c[i] = c;
        w.c_x[i] = -B1 / (2.0 * c);
        w.c_xx[i] = -B2 / (2.0 * c) - B1 * B1 / (4.0 * c3);
        w.c_xxx[i] = -B3 / (2.0 * c) - 0.75 * B1 * B2 / c3 - 0.375 * B1 * B1 * B1 / c5;
        w.c0_floor = std::min(w.c0_floor, c);
    }
    return w;
}

}  // namespace wavelab
