#pragma once

#include <optional>

#include "unruhdec/constants.hpp"

namespace unruhdec {

/// Low-frequency optical description of the dielectric sphere.
struct SphereOptics {
    double epsilon;              // d.c. relative permittivity, > 0
    double R;                    // radius [m]
    std::optional<double> mass;  // sphere mass [kg], enables the recoil check
};

/// Polarizability factor (epsilon - 1) / (epsilon + 2) of a small sphere.
double clausius_mossotti(double epsilon);

/// Mean excitation per field mode seen by an observer with proper
/// acceleration a:  nbar = [1 + 2 (a/(omega c))^2] / (e^{2 pi c omega / a} - 1).
/// Close to, but not exactly, the Planck form.
double mean_occupation(double omega, double a, const PhysicalConstants& k);

/// Unpolarized dipole differential cross-section
/// dsigma/dOmega = k^4 R^6 f_eps^2 (1 + cos^2 theta) / 2, valid for kR << 1.
double diff_cross_section(double k, double cos_theta, const SphereOptics& optics);

/// Total cross-section (8 pi / 3) k^4 R^6 f_eps^2.
double total_cross_section(double k, const SphereOptics& optics);

/// Momentum-transfer rate times quantization volume:
/// Gamma_k V = (16 pi / 3) nbar(ck) c k^4 R^6 f_eps^2.
/// V is never used alone; it cancels against the V in the mode density.
double momentum_transfer_rate_volume(double k, double a, const SphereOptics& optics,
                                     const PhysicalConstants& kc);

/// Per-mode summary used by the Monte Carlo configuration.
struct ModeRate {
    double k;
    double nbar;
    double gamma_k_V;  // [m^3/s]
};

ModeRate mode_rate(double k, double a, const SphereOptics& optics,
                   const PhysicalConstants& kc);

/// Wavevector where the radiation spectrum peaks, k ~ kB T / (hbar c) = a/(2 pi c^2).
double typical_wavevector(double a, const PhysicalConstants& k);

/// Regime checks for the dipole-scattering model.
struct RadiationFlags {
    double k_typical;
    bool kR_small;                    // k_typical * R < 0.1
    bool dipole_ok;                   // a R / c^2 <= 2 pi
    std::optional<bool> heavy_sphere; // hbar k / (m c) < 1e-3; unset when mass unknown
};

/// k_typical defaults to a/(2 pi c^2) when not supplied.
RadiationFlags validity_flags(const SphereOptics& optics, const PhysicalConstants& kc,
                              double a, std::optional<double> k_typical = {});

/// Spectral kernel J = int_0^inf u^8 nbar-shape(u) du with
/// nbar-shape(u) = (1 + 2/u^2) / (e^{2 pi u} - 1), i.e. the dimensionless
/// weight of the mode integral. Evaluated by adaptive quadrature with a
/// certified exponential tail bound (truncation < tail_frac of the total).
double spectral_kernel_J(double rel_tol = 1e-13, double tail_frac = 1e-12);

/// Same kernel in closed form, 8! zeta(9)/(2 pi)^9 + 2*6! zeta(7)/(2 pi)^7.
double spectral_kernel_J_zeta();

}  // namespace unruhdec
