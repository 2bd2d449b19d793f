#include "unruhdec/dce.hpp"

#include <cmath>
#include <stdexcept>

namespace unruhdec {

namespace {

void check_params(const MirrorParams& p) {
    if (p.mass <= 0.0) throw std::domain_error("dce: mass must be > 0");
    if (p.omega0 <= 0.0) throw std::domain_error("dce: omega0 must be > 0");
    if (p.R < 0.0) throw std::domain_error("dce: R must be >= 0");
    if (p.n_half_periods < 1) throw std::domain_error("dce: N must be >= 1");
}

}  // namespace

double coherent_amplitude_sq(const MirrorParams& p, const PhysicalConstants& k) {
    check_params(p);
    return p.R * p.R * p.mass * p.omega0 / (2.0 * k.hbar);
}

double dce_decoherence_rate(const MirrorParams& p, const PhysicalConstants& k) {
    return coherent_amplitude_sq(p, k) * k.hbar * p.omega0 * p.omega0 /
           (3.0 * M_PI * p.mass * k.c * k.c);
}

double dce_decoherence_rate_reduced(const MirrorParams& p, const PhysicalConstants& k) {
    check_params(p);
    return p.R * p.R * p.omega0 * p.omega0 * p.omega0 / (6.0 * M_PI * k.c * k.c);
}

CoherenceBound coherence_bound(int N, const PhysicalConstants& k) {
    if (N < 1) throw std::domain_error("coherence_bound: N must be >= 1");
    const double n = static_cast<double>(N);
    return {6.0 * k.c * k.c / n, 6.0 / n, 1.0 / n};
}

MirrorAssessment check_mirror(const MirrorParams& p, const PhysicalConstants& k) {
    check_params(p);
    const CoherenceBound b = coherence_bound(p.n_half_periods, k);
    const double a = p.omega0 * p.omega0 * p.R;
    const double ra_c2 = p.R * a / (k.c * k.c);
    MirrorAssessment out;
    out.alpha_sq = coherent_amplitude_sq(p, k);
    out.gamma_rate = dce_decoherence_rate(p, k);
    out.ra_over_c2 = ra_c2;
    out.v_over_c = p.omega0 * p.R / k.c;
    out.coherent_exact = ra_c2 <= b.ra_c2_max_exact;
    out.coherent_paper = ra_c2 <= b.ra_c2_max_paper;
    out.low_velocity_ok = out.v_over_c < 0.3;
    return out;
}

}  // namespace unruhdec
