#pragma once

#include "unruhdec/constants.hpp"

namespace unruhdec {

/// Oscillating perfectly reflecting mirror, the comparison system for the
/// dynamical Casimir effect.
struct MirrorParams {
    double mass;         // M [kg]
    double omega0;       // oscillation angular frequency [rad/s]
    double R;            // oscillation amplitude [m]
    int n_half_periods;  // N, coherent half-periods demanded
};

/// Mean phonon number of the coherent oscillation, |alpha|^2 = R^2 M omega0 / (2 hbar).
double coherent_amplitude_sq(const MirrorParams& p, const PhysicalConstants& k);

/// Decoherence rate of a superposition of coherent states,
/// Gamma = |alpha|^2 hbar omega0^2 / (3 pi M c^2).
double dce_decoherence_rate(const MirrorParams& p, const PhysicalConstants& k);

/// The same rate with M and hbar cancelled, R^2 omega0^3 / (6 pi c^2).
double dce_decoherence_rate_reduced(const MirrorParams& p, const PhysicalConstants& k);

/// Coherence thresholds for N half-periods. The order-of-magnitude estimate
/// drops the factor 6 that the exact bookkeeping keeps; both are exposed.
struct CoherenceBound {
    double r2w2_max;        // exact: R^2 omega0^2 <= 6 c^2 / N
    double ra_c2_max_exact; // with a = omega0^2 R: R a / c^2 <= 6 / N
    double ra_c2_max_paper; // order of magnitude form: R a / c^2 <= 1 / N
};

CoherenceBound coherence_bound(int N, const PhysicalConstants& k);

struct MirrorAssessment {
    double alpha_sq;
    double gamma_rate;      // [1/s]
    double ra_over_c2;      // R a / c^2, with a = omega0^2 R
    double v_over_c;        // omega0 R / c
    bool coherent_exact;
    bool coherent_paper;
    bool low_velocity_ok;   // v/c < 0.3; the rate formula assumes v << c
};

MirrorAssessment check_mirror(const MirrorParams& p, const PhysicalConstants& k);

}  // namespace unruhdec
