#include "unruhdec/radiation.hpp"

#include <cmath>
#include <stdexcept>

#include "unruhdec/errors.hpp"
#include "unruhdec/quadrature.hpp"

namespace unruhdec {

namespace {

void check_optics(const SphereOptics& optics, const char* who) {
    if (optics.epsilon <= 0.0)
        throw std::domain_error(std::string(who) + ": epsilon must be > 0");
    if (optics.R <= 0.0) throw std::domain_error(std::string(who) + ": R must be > 0");
}

// Integrand of the spectral kernel; expm1 keeps the u -> 0 end accurate,
// where the integrand behaves as u^5 / pi.
double kernel_shape(double u) {
    if (u <= 0.0) return 0.0;
    const double u2 = u * u;
    const double u6 = u2 * u2 * u2;
    return u6 * (u2 + 2.0) / std::expm1(2.0 * M_PI * u);
}

// int_U^inf u^n e^{-s u} du = e^{-sU} sum_{j=0}^{n} (n!/j!) U^j / s^{n+1-j}.
double exp_moment_tail(int n, double s, double U) {
    double sum = 0.0;
    double coef = 1.0;  // n!/j!, starting at j = n
    for (int j = n; j >= 0; --j) {
        sum += coef * std::pow(U, j) / std::pow(s, n + 1 - j);
        coef *= static_cast<double>(j);
    }
    return std::exp(-s * U) * sum;
}

}  // namespace

double clausius_mossotti(double epsilon) {
    if (epsilon <= 0.0)
        throw std::domain_error("clausius_mossotti: epsilon must be > 0");
    return (epsilon - 1.0) / (epsilon + 2.0);
}

double mean_occupation(double omega, double a, const PhysicalConstants& k) {
    if (omega <= 0.0) throw std::domain_error("mean_occupation: omega must be > 0");
    if (a <= 0.0) throw std::domain_error("mean_occupation: a must be > 0");
    const double r = 2.0 * M_PI * k.c * omega / a;
    const double ratio = a / (omega * k.c);
    const double den = std::expm1(r);
    if (!std::isfinite(den)) return 0.0;  // deep exponential suppression
    return (1.0 + 2.0 * ratio * ratio) / den;
}

double diff_cross_section(double k, double cos_theta, const SphereOptics& optics) {
    check_optics(optics, "diff_cross_section");
    if (k <= 0.0) throw std::domain_error("diff_cross_section: k must be > 0");
    if (std::fabs(cos_theta) > 1.0)
        throw std::domain_error("diff_cross_section: |cos_theta| must be <= 1");
    const double f = clausius_mossotti(optics.epsilon);
    const double k4 = k * k * k * k;
    const double R2 = optics.R * optics.R;
    const double R6 = R2 * R2 * R2;
    return k4 * R6 * f * f * 0.5 * (1.0 + cos_theta * cos_theta);
}

double total_cross_section(double k, const SphereOptics& optics) {
    check_optics(optics, "total_cross_section");
    if (k <= 0.0) throw std::domain_error("total_cross_section: k must be > 0");
    const double f = clausius_mossotti(optics.epsilon);
    const double k4 = k * k * k * k;
    const double R2 = optics.R * optics.R;
    const double R6 = R2 * R2 * R2;
    return (8.0 * M_PI / 3.0) * k4 * R6 * f * f;
}

double momentum_transfer_rate_volume(double k, double a, const SphereOptics& optics,
                                     const PhysicalConstants& kc) {
    // <2(1 - cos theta)> over the dipole phase function equals 2, so the
    // momentum-transfer integral is twice the total cross-section.
    return 2.0 * kc.c * mean_occupation(kc.c * k, a, kc) * total_cross_section(k, optics);
}

ModeRate mode_rate(double k, double a, const SphereOptics& optics,
                   const PhysicalConstants& kc) {
    return {k, mean_occupation(kc.c * k, a, kc),
            momentum_transfer_rate_volume(k, a, optics, kc)};
}

double typical_wavevector(double a, const PhysicalConstants& k) {
    if (a < 0.0) throw std::domain_error("typical_wavevector: a must be >= 0");
    return a / (2.0 * M_PI * k.c * k.c);
}

RadiationFlags validity_flags(const SphereOptics& optics, const PhysicalConstants& kc,
                              double a, std::optional<double> k_typical) {
    check_optics(optics, "validity_flags");
    if (a < 0.0) throw std::domain_error("validity_flags: a must be >= 0");
    const double kt = k_typical.value_or(typical_wavevector(a, kc));
    RadiationFlags flags;
    flags.k_typical = kt;
    flags.kR_small = kt * optics.R < 0.1;
    flags.dipole_ok = a * optics.R / (kc.c * kc.c) <= 2.0 * M_PI;
    if (optics.mass)
        flags.heavy_sphere = kc.hbar * kt / (*optics.mass * kc.c) < 1e-3;
    return flags;
}

double spectral_kernel_J(double rel_tol, double tail_frac) {
    // Integrate over (0, U], growing U until the analytic tail bound
    // (u^8 + 2 u^6) e^{-2 pi u} / (1 - e^{-2 pi U}) certifies the truncation.
    const double s = 2.0 * M_PI;
    double U = 4.0;
    auto piece = [&](double lo, double hi) {
        auto r = quad::integrate(kernel_shape, lo, hi, rel_tol);
        if (!r.converged)
            throw numeric_error("spectral_kernel_J: quadrature did not converge");
        return r.value;
    };
    double total = piece(0.0, 1.0) + piece(1.0, U);
    for (;;) {
        const double geom = 1.0 / (1.0 - std::exp(-s * U));
        const double tail =
            geom * (exp_moment_tail(8, s, U) + 2.0 * exp_moment_tail(6, s, U));
        if (tail < tail_frac * total) break;
        if (U > 512.0)
            throw numeric_error("spectral_kernel_J: tail bound did not close");
        total += piece(U, U + 4.0);
        U += 4.0;
    }
    return total;
}

double spectral_kernel_J_zeta() {
    const double two_pi = 2.0 * M_PI;
    const double p7 = std::pow(two_pi, 7);
    const double p9 = std::pow(two_pi, 9);
    // 8! = 40320, 6! = 720.
    return 40320.0 * std::riemann_zeta(9.0) / p9 +
           2.0 * 720.0 * std::riemann_zeta(7.0) / p7;
}

}  // namespace unruhdec
