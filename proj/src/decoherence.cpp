#include "unruhdec/decoherence.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "unruhdec/errors.hpp"
#include "unruhdec/quadrature.hpp"

namespace unruhdec {

namespace {

void check_input(const DecoherenceInput& in, const char* who) {
    if (in.a <= 0.0) throw std::domain_error(std::string(who) + ": a must be > 0");
    if (in.optics.R <= 0.0)
        throw std::domain_error(std::string(who) + ": R must be > 0");
    if (in.optics.epsilon <= 0.0)
        throw std::domain_error(std::string(who) + ": epsilon must be > 0");
}

ValidityFlags make_flags(const DecoherenceInput& in, const DimensionlessGroups& g) {
    const RadiationFlags rf = validity_flags(in.optics, in.constants, in.a);
    ValidityFlags f;
    f.dipole_ok = rf.dipole_ok;
    f.kR_small = rf.kR_small;
    f.heavy_sphere = rf.heavy_sphere;
    f.horizon_ok = rindler_horizon_ok(in.a, in.optics.R, in.constants).ok;
    f.unruh_regime = g.theta1 > kFitWindowLo && g.theta1 < fit_window_hi();
    return f;
}

}  // namespace

const char* method_name(Method m) {
    return m == Method::closed_form ? "closed-form" : "exact-quadrature";
}

double fit_window_hi() {
    static const double hi = std::acosh(1.5);
    return hi;
}

double integrand(double tau, const TrajectoryParams& p) {
    const KinematicState ks = kinematics(tau, p);
    return ks.gamma * ks.gamma * ks.speed_abs * std::sqrt(tau);
}

GWithError trajectory_integral_G_error(double theta1, double rel_tol) {
    if (theta1 <= 0.0)
        throw std::domain_error("trajectory_integral_G: theta1 must be > 0");
    // cosh^2(u) |tanh(u)| = sinh(2|u|) / 2, with u the per-segment rapidity.
    // The first piece is rewritten with s = t^2 so the sqrt(s) endpoint
    // disappears; the pieces are non-negative, so per-piece relative
    // tolerances of rel_tol/4 bound the total relative error by rel_tol.
    const double t1 = theta1;
    const double tol = rel_tol / 4.0;
    auto run = [&](auto&& f, double lo, double hi) {
        auto r = quad::integrate(f, lo, hi, tol);
        if (!r.converged) {
            std::ostringstream msg;
            msg << "trajectory_integral_G: quadrature not converged at theta1="
                << theta1 << " on [" << lo << ", " << hi << "], error estimate "
                << r.error << " after " << r.intervals << " intervals";
            throw numeric_error(msg.str());
        }
        return r;
    };
    auto a = run([](double t) { return std::sinh(2.0 * t * t) * t * t; }, 0.0,
                 std::sqrt(t1));
    auto b = run([=](double s) { return 0.5 * std::sinh(2.0 * (2.0 * t1 - s)) * std::sqrt(s); },
                 t1, 2.0 * t1);
    auto c = run([=](double s) { return 0.5 * std::sinh(2.0 * (s - 2.0 * t1)) * std::sqrt(s); },
                 2.0 * t1, 3.0 * t1);
    auto d = run([=](double s) { return 0.5 * std::sinh(2.0 * (4.0 * t1 - s)) * std::sqrt(s); },
                 3.0 * t1, 4.0 * t1);
    return {a.value + b.value + c.value + d.value,
            a.error + b.error + c.error + d.error};
}

double trajectory_integral_G(double theta1, double rel_tol) {
    return trajectory_integral_G_error(theta1, rel_tol).value;
}

double phase_variance_mode_density(double k, const DecoherenceInput& in, Method method) {
    check_input(in, "phase_variance_mode_density");
    if (k <= 0.0)
        throw std::domain_error("phase_variance_mode_density: k must be > 0");
    const PhysicalConstants& pc = in.constants;
    const DimensionlessGroups g = dimensionless_groups(in.a, in.optics.R, pc);
    const double gamma_k_V = momentum_transfer_rate_volume(k, in.a, in.optics, pc);
    const double c = pc.c;
    double dphik_sq_V;  // Delta phi_k^2 * V
    if (method == Method::exact_quadrature) {
        const double G = trajectory_integral_G(g.theta1);
        dphik_sq_V = k * k * c * c * gamma_k_V * (c * c * c) / (in.a * in.a * in.a) * G * G;
    } else {
        const double tau1 = (c / in.a) * g.theta1;
        const double kR = k * in.optics.R;
        const double boost = 1.0 + 0.25 * g.x;
        dphik_sq_V = kFitConstant * gamma_k_V * tau1 * kR * kR * boost * boost;
    }
    return dphik_sq_V * k * k / (2.0 * M_PI * M_PI);
}

DecoherenceResult phase_variance(const DecoherenceInput& in, Method method) {
    check_input(in, "phase_variance");
    const PhysicalConstants& pc = in.constants;
    const DimensionlessGroups g = dimensionless_groups(in.a, in.optics.R, pc);
    const double f = clausius_mossotti(in.optics.epsilon);
    const double x = g.x;
    double dphi_sq;
    if (method == Method::closed_form) {
        // 0.04 f^2 (1 + x/4)^2 (tau1 c / R) x^9 with tau1 c/R = theta1/x.
        const double boost = 1.0 + 0.25 * x;
        dphi_sq = kClosedFormPrefactor * f * f * boost * boost * g.theta1 *
                  std::pow(x, 8);
    } else {
        // int chi(k) dk with u = c^2 k / a factors into
        // (8/(3 pi)) J G(theta1)^2 x^6 f^2.
        const double J = spectral_kernel_J();
        const double G = trajectory_integral_G(g.theta1);
        dphi_sq = (8.0 / (3.0 * M_PI)) * J * G * G * std::pow(x, 6) * f * f;
    }
    DecoherenceResult out;
    out.delta_phi_sq = dphi_sq;
    out.delta_phi_tot = total_phase_uncertainty(dphi_sq);
    out.groups = g;
    out.flags = make_flags(in, g);
    out.method = method;
    return out;
}

double total_phase_uncertainty(double delta_phi_sq) {
    if (delta_phi_sq < 0.0)
        throw std::domain_error("total_phase_uncertainty: variance must be >= 0");
    return std::sqrt(2.0 * delta_phi_sq);
}

double total_phase_uncertainty(const DecoherenceResult& r) {
    return total_phase_uncertainty(r.delta_phi_sq);
}

FitReport fitted_constant_report(std::span<const double> theta_grid) {
    if (theta_grid.size() < 20)
        throw std::domain_error(
            "fitted_constant_report: need at least 20 grid points");
    const double hi = fit_window_hi();
    bool in_window = true;
    double sum_ratio = 0.0;
    std::vector<double> ratios;
    ratios.reserve(theta_grid.size());
    for (double th : theta_grid) {
        if (th <= 0.0)
            throw std::domain_error("fitted_constant_report: theta must be > 0");
        in_window = in_window && th > kFitWindowLo && th < hi;
        const double G = trajectory_integral_G(th);
        const double sh = std::sinh(th);
        const double ratio = G * G / (th * sh * sh * sh * sh);
        ratios.push_back(ratio);
        sum_ratio += ratio;
    }
    const double C = sum_ratio / static_cast<double>(ratios.size());
    double max_dev = 0.0;
    for (double r : ratios) max_dev = std::max(max_dev, std::fabs(r / C - 1.0));
    return {C, max_dev, in_window, theta_grid.size()};
}

std::vector<double> default_fit_grid(std::size_t n) {
    const double lo = kFitWindowLo;
    const double hi = fit_window_hi();
    std::vector<double> grid(n);
    for (std::size_t i = 0; i < n; ++i)
        grid[i] = lo + (hi - lo) * (static_cast<double>(i) + 0.5) / static_cast<double>(n);
    return grid;
}

double spectral_prefactor_exact() {
    const auto grid = default_fit_grid();
    const FitReport fit = fitted_constant_report(grid);
    return (8.0 / (3.0 * M_PI)) * spectral_kernel_J() * fit.C_best;
}

}  // namespace unruhdec
