#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "unruhdec/decoherence.hpp"

namespace unruhdec {

/// Per-realization random stream derived from (seed, realization index),
/// so ensembles are schedule-independent. The engine is mt19937_64 and all
/// variate transforms are implemented here, keeping the draw sequence fixed
/// across standard-library implementations.
class RngStream {
  public:
    RngStream(std::uint64_t seed, std::uint64_t stream);

    /// 53-bit uniform in [0, 1).
    double uniform01();

    /// Exponential inter-arrival time with the given rate.
    double exponential(double rate);

    /// Poisson count; exact (Knuth product method, chunked for large means).
    std::uint64_t poisson(double mean);

  private:
    std::mt19937_64 eng_;
};

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;
    Vec3& operator+=(const Vec3& o) {
        x += o.x; y += o.y; z += o.z;
        return *this;
    }
    friend Vec3 operator-(const Vec3& a, const Vec3& b) {
        return {a.x - b.x, a.y - b.y, a.z - b.z};
    }
    double norm_sq() const { return x * x + y * y + z * z; }
};

/// Unit vector uniform on the sphere.
Vec3 sample_isotropic_direction(RngStream& rng);

/// Scattering deflection cosine with density proportional to 1 + cos^2,
/// by bracketed Newton inversion of the cubic CDF to 1e-12.
double sample_scatter_cos(RngStream& rng);

/// Direction after deflecting `incident` by angle theta (cos_theta given)
/// with uniform azimuth.
Vec3 deflect(const Vec3& incident, double cos_theta, double azimuth);

struct McConfig {
    std::uint64_t seed = 1;
    int n_realizations = 10000;
    double k;  // mode wavevector [1/m]
    DecoherenceInput input;
    double event_rate_volume;  // lambda V = sigma_tot nbar c [m^3/s]

    /// Fills event_rate_volume from the physics. All rates are interpreted
    /// per unit quantization volume; only V-independent ratios are reported.
    static McConfig make(std::uint64_t seed, int n_realizations, double k,
                         const DecoherenceInput& input);
};

struct McResult {
    double mean_dp_sq;  // ensemble mean of |sum of kicks|^2 [kg^2 m^2/s^2]
    double std_error;   // standard error of the mean
    double analytic;    // hbar^2 k^2 Gamma_k tau reference
    double z;           // (mean - analytic) / std_error
};

/// Random walk of elastic photon kicks hbar k (n - n') over proper time tau:
/// event count Poisson(lambda tau), isotropic incidence, dipole-phase-function
/// deflection. The ensemble mean of |sum delta p|^2 estimates
/// Delta p0^2 = hbar^2 k^2 Gamma_k tau.
McResult momentum_walk(const McConfig& cfg, double tau);

struct PhaseWalkResult {
    std::optional<double> ratio;  // empty when the event rate is zero
    double phi_std;               // ensemble standard deviation of the phase
    double prediction;            // k c sqrt(Gamma_k c^3/a^3) G(theta1)
};

/// Stochastic counterpart of the phase-spread integral: each realization
/// accumulates d phi = gamma^2 |v| p_x(tau) / hbar d tau along the
/// three-segment trajectory, where p_x is the motion-axis component of the
/// accumulated rest-frame kicks (boosted to frame F by the gamma factor).
/// Reports the ratio of the ensemble phase spread to the deterministic
/// prediction; no target value is asserted.
PhaseWalkResult phase_walk(const McConfig& cfg);

}  // namespace unruhdec
