#pragma once

#include "unruhdec/constants.hpp"

namespace unruhdec {

/// The three-segment constant-proper-acceleration trajectory of one
/// interferometer arm: accelerate for tau1, decelerate/reverse for 2*tau1,
/// accelerate back for tau1. tau1 is fixed by requiring the arm to cover
/// half the arm separation scale R in the first segment.
struct TrajectoryParams {
    double a;     // proper acceleration magnitude [m/s^2]
    double R;     // sphere radius = half the arm separation scale [m]
    double c;     // speed of light of the active unit system [m/s]
    double tau1;  // proper duration of the first segment [s]
    double total_proper_time;  // 4 * tau1 [s]
};

/// Proper time of the first segment, tau1 = (c/a) acosh(1 + aR/(2c^2)).
double tau1(double a, double R, const PhysicalConstants& k);

TrajectoryParams make_trajectory(double a, double R, const PhysicalConstants& k);

/// Segment index j: 0 on [0, tau1), 1 on [tau1, 3 tau1), 2 on [3 tau1, 4 tau1].
/// A boundary tau belongs to the later segment.
int segment_index(double tau, double tau1);

struct KinematicState {
    double tau;        // proper time [s]
    double gamma;      // Lorentz factor
    double velocity;   // signed velocity in frame F [m/s]
    double speed_abs;  // |velocity| [m/s]
    double x;          // position in frame F, x(0) = 0 [m]
    int segment;       // j in {0,1,2}
};

/// Kinematics at proper time tau in [0, 4 tau1].
///
/// gamma = cosh(a(tau - 2 j tau1)/c) and |v| = c |tanh(...)| follow the
/// per-segment hyperbolic form; the sign of v alternates (+,-,+) per segment
/// so that position is continuous, reaching x = R at tau = 2 tau1 and
/// returning to 0 at 4 tau1.
KinematicState kinematics(double tau, const TrajectoryParams& p);

/// Tidal validity: the sphere surface stays inside the Rindler horizon
/// only while aR/c^2 < 1. margin = c^2/(aR) (> 1 means ok).
struct HorizonCheck {
    bool ok;
    double margin;
};

HorizonCheck rindler_horizon_ok(double a, double R, const PhysicalConstants& k);

}  // namespace unruhdec
