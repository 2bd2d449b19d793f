#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "unruhdec/constants.hpp"
#include "unruhdec/radiation.hpp"
#include "unruhdec/worldline.hpp"

namespace unruhdec {

enum class Method { closed_form, exact_quadrature };

const char* method_name(Method m);

struct DecoherenceInput {
    double a;  // proper acceleration [m/s^2]
    SphereOptics optics;
    PhysicalConstants constants;
};

struct ValidityFlags {
    bool dipole_ok;
    bool kR_small;
    bool horizon_ok;
    bool unruh_regime;  // 0.5 < theta1 < acosh(3/2)
    std::optional<bool> heavy_sphere;
};

struct DecoherenceResult {
    double delta_phi_sq;   // single-arm phase variance [rad^2]
    double delta_phi_tot;  // sqrt(2) * sqrt(delta_phi_sq), two uncorrelated arms
    DimensionlessGroups groups;
    ValidityFlags flags;
    Method method;
};

/// Phase-spread integrand gamma^2 |v| sqrt(tau) along the trajectory.
double integrand(double tau, const TrajectoryParams& p);

/// Dimensionless trajectory integral
/// G(theta1) = int_0^{4 theta1} cosh^2(s - 2 j theta1) |tanh(s - 2 j theta1)| sqrt(s) ds
/// by adaptive quadrature split at theta1, 2 theta1, 3 theta1 (the sqrt
/// endpoint is removed by substitution on the first piece). Throws
/// numeric_error when the requested tolerance cannot be met.
double trajectory_integral_G(double theta1, double rel_tol = 1e-10);

struct GWithError {
    double value;
    double error;  // absolute error estimate of the quadrature
};

GWithError trajectory_integral_G_error(double theta1, double rel_tol = 1e-10);

/// Phase-variance density in k: chi(k) = Delta phi_k^2 V k^2 / (2 pi^2),
/// so that the total variance is int_0^inf chi(k) dk. The quantization
/// volume cancels between Delta phi_k^2 V and the mode density.
double phase_variance_mode_density(double k, const DecoherenceInput& in, Method method);

/// Single-arm phase variance.
///
/// closed_form evaluates the published fit
///   0.04 f^2 (1 + x/4)^2 (tau1 c / R) x^9;
/// exact_quadrature integrates chi(k) with the substitution u = c^2 k / a,
/// the trajectory integral G and the spectral kernel J both computed by
/// adaptive quadrature with certified truncation (< 1e-12 of the total).
DecoherenceResult phase_variance(const DecoherenceInput& in, Method method);

/// Interference phase uncertainty of the two-arm, uncorrelated case.
double total_phase_uncertainty(double delta_phi_sq);
double total_phase_uncertainty(const DecoherenceResult& r);

/// The window where the thermal-spectrum approximation is trusted.
inline constexpr double kFitWindowLo = 0.5;
double fit_window_hi();  // acosh(3/2)

/// Constant C that best fits G(theta)^2 = C theta sinh^4(theta) on a grid,
/// by least squares on the ratios G^2/(theta sinh^4 theta), plus the worst
/// relative deviation of the data from the fit.
struct FitReport {
    double C_best;
    double max_rel_dev;
    bool in_paper_window;  // all grid points inside (0.5, acosh(3/2))
    std::size_t n_points;
};

FitReport fitted_constant_report(std::span<const double> theta_grid);

/// n midpoints of the trusted window (0.5, acosh(3/2)).
std::vector<double> default_fit_grid(std::size_t n = 50);

/// Prefactor of the closed-form variance derived from exact quadrature:
/// (8 / (3 pi)) J C_fit, approximately 0.0398 (the published value rounds
/// it to 0.04).
double spectral_prefactor_exact();

inline constexpr double kClosedFormPrefactor = 0.04;
inline constexpr double kFitConstant = 7.325;

}  // namespace unruhdec
