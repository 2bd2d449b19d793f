#include "unruhdec/worldline.hpp"

#include <cmath>
#include <stdexcept>

namespace unruhdec {

double tau1(double a, double R, const PhysicalConstants& k) {
    if (a <= 0.0) throw std::domain_error("tau1: a must be > 0");
    if (R <= 0.0) throw std::domain_error("tau1: R must be > 0");
    const double x = a * R / (k.c * k.c);
    return (k.c / a) * theta1_of_x(x);
}

TrajectoryParams make_trajectory(double a, double R, const PhysicalConstants& k) {
    const double t1 = tau1(a, R, k);
    return {a, R, k.c, t1, 4.0 * t1};
}

int segment_index(double tau, double tau1) {
    if (tau1 <= 0.0) throw std::domain_error("segment_index: tau1 must be > 0");
    if (tau < 0.0 || tau > 4.0 * tau1)
        throw std::domain_error("segment_index: tau outside [0, 4 tau1]");
    if (tau < tau1) return 0;
    if (tau < 3.0 * tau1) return 1;
    return 2;
}

KinematicState kinematics(double tau, const TrajectoryParams& p) {
    const int j = segment_index(tau, p.tau1);
    const double c = p.c;
    // Signed rapidity: w > 0 means motion in +x. The (+,-,+) acceleration
    // pattern gives w = a tau/c, a(2 tau1 - tau)/c, a(tau - 4 tau1)/c.
    double w = 0.0;
    switch (j) {
        case 0: w = p.a * tau / c; break;
        case 1: w = p.a * (2.0 * p.tau1 - tau) / c; break;
        default: w = p.a * (tau - 4.0 * p.tau1) / c; break;
    }
    const double gamma = std::cosh(w);
    const double velocity = c * std::tanh(w);
    // cosh(w) - 1 = 2 sinh^2(w/2), stable for small w.
    const double sh = std::sinh(0.5 * w);
    const double cosh_m1 = 2.0 * sh * sh;
    const double x = (j == 1) ? p.R - (c * c / p.a) * cosh_m1
                              : (c * c / p.a) * cosh_m1;
    return {tau, gamma, velocity, std::fabs(velocity), x, j};
}

HorizonCheck rindler_horizon_ok(double a, double R, const PhysicalConstants& k) {
    if (a < 0.0) throw std::domain_error("rindler_horizon_ok: a must be >= 0");
    if (R <= 0.0) throw std::domain_error("rindler_horizon_ok: R must be > 0");
    const double x = a * R / (k.c * k.c);
    return {x < 1.0, k.c * k.c / (a * R)};
}

}  // namespace unruhdec
