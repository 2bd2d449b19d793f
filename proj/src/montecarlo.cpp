#include "unruhdec/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace unruhdec {

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffu),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream & 0xffffffffu),
                      static_cast<std::uint32_t>(stream >> 32)};
    eng_.seed(seq);
}

double RngStream::uniform01() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
}

double RngStream::exponential(double rate) {
    // -log(1 - u) maps [0,1) onto [0, inf) without ever taking log(0).
    return -std::log1p(-uniform01()) / rate;
}

std::uint64_t RngStream::poisson(double mean) {
    if (mean < 0.0) throw std::domain_error("poisson: mean must be >= 0");
    std::uint64_t total = 0;
    // exp(-mean) stays normal for mean <= 500; larger means are split.
    while (mean > 500.0) {
        total += poisson(500.0);
        mean -= 500.0;
    }
    const double L = std::exp(-mean);
    std::uint64_t n = 0;
    double p = 1.0;
    do {
        ++n;
        p *= uniform01();
    } while (p > L);
    return total + n - 1;
}

Vec3 sample_isotropic_direction(RngStream& rng) {
    const double cz = 2.0 * rng.uniform01() - 1.0;
    const double phi = 2.0 * M_PI * rng.uniform01();
    const double sz = std::sqrt(std::max(0.0, 1.0 - cz * cz));
    return {sz * std::cos(phi), sz * std::sin(phi), cz};
}

double sample_scatter_cos(RngStream& rng) {
    // CDF of the (1 + c^2) density on [-1, 1]: F(c) = (c^3 + 3c + 4) / 8.
    const double u = rng.uniform01();
    const double target = 8.0 * u - 4.0;
    double lo = -1.0, hi = 1.0;
    double c = 2.0 * u - 1.0;
    for (int it = 0; it < 100; ++it) {
        const double g = c * c * c + 3.0 * c - target;
        if (g > 0.0) hi = c; else lo = c;
        const double step = g / (3.0 * c * c + 3.0);
        double next = c - step;
        if (next <= lo || next >= hi) next = 0.5 * (lo + hi);
        if (std::fabs(next - c) < 1e-13 && std::fabs(g) < 8.0 * 1e-12) {
            c = next;
            break;
        }
        c = next;
    }
    return std::clamp(c, -1.0, 1.0);
}

Vec3 deflect(const Vec3& incident, double cos_theta, double azimuth) {
    // Orthonormal frame around the incident direction.
    const Vec3 ref = std::fabs(incident.x) < 0.9 ? Vec3{1.0, 0.0, 0.0}
                                                 : Vec3{0.0, 1.0, 0.0};
    Vec3 e1{incident.y * ref.z - incident.z * ref.y,
            incident.z * ref.x - incident.x * ref.z,
            incident.x * ref.y - incident.y * ref.x};
    const double n1 = std::sqrt(e1.norm_sq());
    e1 = {e1.x / n1, e1.y / n1, e1.z / n1};
    const Vec3 e2{incident.y * e1.z - incident.z * e1.y,
                  incident.z * e1.x - incident.x * e1.z,
                  incident.x * e1.y - incident.y * e1.x};
    const double st = std::sqrt(std::max(0.0, 1.0 - cos_theta * cos_theta));
    const double ca = std::cos(azimuth), sa = std::sin(azimuth);
    return {cos_theta * incident.x + st * (ca * e1.x + sa * e2.x),
            cos_theta * incident.y + st * (ca * e1.y + sa * e2.y),
            cos_theta * incident.z + st * (ca * e1.z + sa * e2.z)};
}

McConfig McConfig::make(std::uint64_t seed, int n_realizations, double k,
                        const DecoherenceInput& input) {
    if (n_realizations < 1)
        throw std::domain_error("McConfig: n_realizations must be >= 1");
    if (k <= 0.0) throw std::domain_error("McConfig: k must be > 0");
    McConfig cfg;
    cfg.seed = seed;
    cfg.n_realizations = n_realizations;
    cfg.k = k;
    cfg.input = input;
    cfg.event_rate_volume = total_cross_section(k, input.optics) *
                            mean_occupation(input.constants.c * k, input.a,
                                            input.constants) *
                            input.constants.c;
    return cfg;
}

namespace {

// One scattering event: incident direction, deflection, momentum kick n - n'.
// Draw order is fixed: incident (2 uniforms), deflection cosine (1), azimuth (1).
Vec3 draw_kick(RngStream& rng) {
    const Vec3 n = sample_isotropic_direction(rng);
    const double ct = sample_scatter_cos(rng);
    const double az = 2.0 * M_PI * rng.uniform01();
    return n - deflect(n, ct, az);
}

struct MeanStderr {
    double mean;
    double std_error;
};

MeanStderr mean_and_stderr(const std::vector<double>& v) {
    const auto n = static_cast<double>(v.size());
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= n;
    if (v.size() < 2) return {mean, 0.0};
    double ss = 0.0;
    for (double x : v) ss += (x - mean) * (x - mean);
    return {mean, std::sqrt(ss / (n * (n - 1.0)))};
}

}  // namespace

McResult momentum_walk(const McConfig& cfg, double tau) {
    if (tau <= 0.0) throw std::domain_error("momentum_walk: tau must be > 0");
    const double hbark = cfg.input.constants.hbar * cfg.k;
    const double analytic = hbark * hbark *
                            momentum_transfer_rate_volume(cfg.k, cfg.input.a,
                                                          cfg.input.optics,
                                                          cfg.input.constants) *
                            tau;
    if (cfg.event_rate_volume == 0.0) return {0.0, 0.0, analytic, 0.0};
    std::vector<double> dp_sq(static_cast<std::size_t>(cfg.n_realizations));
    for (int r = 0; r < cfg.n_realizations; ++r) {
        RngStream rng(cfg.seed, static_cast<std::uint64_t>(r));
        const std::uint64_t events = rng.poisson(cfg.event_rate_volume * tau);
        Vec3 acc;
        for (std::uint64_t e = 0; e < events; ++e) acc += draw_kick(rng);
        dp_sq[static_cast<std::size_t>(r)] = hbark * hbark * acc.norm_sq();
    }
    const auto [mean, se] = mean_and_stderr(dp_sq);
    const double z = se > 0.0 ? (mean - analytic) / se
                              : (mean == analytic ? 0.0 : INFINITY);
    return {mean, se, analytic, z};
}

namespace {

// Cumulative H(tau) = int_0^tau gamma^2 |v| dtau', in closed form:
// gamma^2 |v| = (c/2) sinh(2|w|), so each quarter contributes
// (c^2/4a)(cosh(2 theta1) - 1).
class PhaseWeight {
  public:
    PhaseWeight(const TrajectoryParams& p)
        : a_(p.a), c_(p.c), tau1_(p.tau1),
          quarter_((p.c * p.c / (4.0 * p.a)) *
                   (std::cosh(2.0 * p.a * p.tau1 / p.c) - 1.0)) {}

    double operator()(double tau) const {
        const double A = c_ * c_ / (4.0 * a_);
        const double th2 = 2.0 * a_ * tau1_ / c_;  // 2 theta1
        if (tau <= tau1_)
            return A * (std::cosh(2.0 * a_ * tau / c_) - 1.0);
        if (tau <= 2.0 * tau1_)
            return quarter_ +
                   A * (std::cosh(th2) - std::cosh(2.0 * a_ * (2.0 * tau1_ - tau) / c_));
        if (tau <= 3.0 * tau1_)
            return 2.0 * quarter_ +
                   A * (std::cosh(2.0 * a_ * (tau - 2.0 * tau1_) / c_) - 1.0);
        return 3.0 * quarter_ +
               A * (std::cosh(th2) - std::cosh(2.0 * a_ * (4.0 * tau1_ - tau) / c_));
    }

  private:
    double a_, c_, tau1_, quarter_;
};

}  // namespace

PhaseWalkResult phase_walk(const McConfig& cfg) {
    const TrajectoryParams traj =
        make_trajectory(cfg.input.a, cfg.input.optics.R, cfg.input.constants);
    const PhysicalConstants& pc = cfg.input.constants;
    const double theta1 = traj.a * traj.tau1 / traj.c;
    const double gamma_k_V = momentum_transfer_rate_volume(
        cfg.k, cfg.input.a, cfg.input.optics, pc);
    const double prediction =
        cfg.k * pc.c *
        std::sqrt(gamma_k_V * pc.c * pc.c * pc.c / (cfg.input.a * cfg.input.a * cfg.input.a)) *
        trajectory_integral_G(theta1);
    if (cfg.event_rate_volume == 0.0) return {std::nullopt, 0.0, prediction};

    const PhaseWeight H(traj);
    const double T = traj.total_proper_time;
    const double hbark = pc.hbar * cfg.k;
    std::vector<double> phases(static_cast<std::size_t>(cfg.n_realizations));
    for (int r = 0; r < cfg.n_realizations; ++r) {
        RngStream rng(cfg.seed, static_cast<std::uint64_t>(r));
        double t = 0.0, px = 0.0, phi = 0.0;
        for (;;) {
            const double te = t + rng.exponential(cfg.event_rate_volume);
            if (te >= T) {
                phi += px * (H(T) - H(t)) / pc.hbar;
                break;
            }
            phi += px * (H(te) - H(t)) / pc.hbar;
            px += hbark * draw_kick(rng).x;
            t = te;
        }
        phases[static_cast<std::size_t>(r)] = phi;
    }
    if (phases.size() < 2) return {std::nullopt, 0.0, prediction};
    double mean = 0.0;
    for (double p : phases) mean += p;
    mean /= static_cast<double>(phases.size());
    double ss = 0.0;
    for (double p : phases) ss += (p - mean) * (p - mean);
    const double sd = std::sqrt(ss / (static_cast<double>(phases.size()) - 1.0));
    return {sd / prediction, sd, prediction};
}

}  // namespace unruhdec
