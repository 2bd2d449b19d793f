#pragma once

#include <cmath>
#include <stdexcept>

namespace unruhdec {

/// Fundamental constants of the unit system in use.
///
/// Every formula in the library is written once, in SI-consistent form;
/// natural units (c = hbar = kB = 1) are obtained by swapping the constant
/// set, not by a separate code path.
struct PhysicalConstants {
    double c;     // speed of light [m/s]
    double hbar;  // reduced Planck constant [J s]
    double kB;    // Boltzmann constant [J/K]

    /// CODATA 2018 SI values (all three are exact by definition).
    static constexpr PhysicalConstants si() noexcept {
        return {299792458.0, 1.054571817e-34, 1.380649e-23};
    }

    /// Natural units, c = hbar = kB = 1.
    static constexpr PhysicalConstants natural() noexcept { return {1.0, 1.0, 1.0}; }
};

/// The two dimensionless combinations every result is reported in:
/// x = a R / c^2 and theta1 = a tau1 / c = acosh(1 + x/2).
struct DimensionlessGroups {
    double x;
    double theta1;
};

/// theta1 as a function of x = aR/c^2.
///
/// Uses log1p to evaluate acosh(1 + x/2) without cancellation; below
/// x = 1e-12 the sqrt(x) asymptote is exact to double precision.
inline double theta1_of_x(double x) {
    if (x < 0.0) throw std::domain_error("theta1_of_x: x must be >= 0");
    if (x < 1e-12) return std::sqrt(x);
    return std::log1p(0.5 * x + std::sqrt(x * (1.0 + 0.25 * x)));
}

/// Temperature seen by an observer with proper acceleration a:
/// T = hbar a / (2 pi c kB).
inline double unruh_temperature(double a, const PhysicalConstants& k) {
    if (a < 0.0) throw std::domain_error("unruh_temperature: a must be >= 0");
    return k.hbar * a / (2.0 * M_PI * k.c * k.kB);
}

inline DimensionlessGroups dimensionless_groups(double a, double R,
                                                const PhysicalConstants& k) {
    if (a < 0.0) throw std::domain_error("dimensionless_groups: a must be >= 0");
    if (R <= 0.0) throw std::domain_error("dimensionless_groups: R must be > 0");
    const double x = a * R / (k.c * k.c);
    return {x, theta1_of_x(x)};
}

}  // namespace unruhdec
