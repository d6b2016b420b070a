#pragma once

#include <complex>

#include "resetwalk/model.hpp"

namespace resetwalk {

// ---------------------------------------------------------------------------
// Transforms of the free (unabsorbed) walk
// ---------------------------------------------------------------------------

// Fourier(x)->omega, Laplace(t)->s transform of the position density for a
// walker started at x0 moving in direction dir. Requires Re(s) > 0 and a
// sign-compatible start (x0 >= 0 for Plus, x0 <= 0 for Minus).
std::complex<double> propagator_fl(const ModelParams& p, double omega,
                                   std::complex<double> s, double x0, Direction dir);

// Characteristic function of the stationary position (requires reset_rate > 0).
// Exactly 1 at omega = 0.
std::complex<double> stationary_cf(const ModelParams& p, double omega);

namespace detail {
// Analytic continuation of propagator_fl to complex s off the right half
// plane, without domain checks: inversion contours (fixed Talbot) evaluate the
// transform at Re(s) <= 0 where the public precondition would reject it.
std::complex<double> propagator_fl_continued(const ModelParams& p, double omega,
                                             std::complex<double> s, double x0,
                                             Direction dir);
} // namespace detail

// Stationary density for the mixed special case: rightward motion is pure
// exponential jumps (rate jump_rate, scale 1/gamma, zero speed), leftward
// motion is pure drift at speed minus_speed. The law has an atom at the
// origin plus two exponential wings.
struct StationaryPoint {
    double density;     // continuous part at x (the atom is NOT included)
    double atom_weight; // P{X = 0} = Lambda*rho / (Lambda + lambda)
};
StationaryPoint stationary_density_exp_drift(double reset_rate, double jump_rate,
                                             double gamma, double minus_speed,
                                             double rho, double x);

// Spatial decay rate of the monotone (rho = 1, all motion rightward) walk's
// stationary tail: beta = Lambda / (Gamma + lambda E[J]).
double tail_exponent_beta(double reset_rate, double speed, double jump_rate,
                          double mean_jump);

// ---------------------------------------------------------------------------
// Survival / first-passage closed forms (level ell > 0)
// ---------------------------------------------------------------------------
// "Survival" means the walker has not yet reached the level ell by time t;
// transforms are in Laplace-s over t. s = 0 is admitted and returns the mean
// first-passage time. A start against the level (Minus) gives x-independent
// results. rho = 0 makes the level unreachable: MFPTs return +infinity.

// Pure drift (no jumps), speeds equal to `speed` both ways.
double sp_laplace_pure_drift(double s, double x, Direction dir, double reset_rate,
                             double speed, double rho, double level);
double mfpt_pure_drift(double x, Direction dir, double reset_rate, double speed,
                       double rho, double level);
double mfpt_pure_drift_unconditional(double reset_rate, double speed, double rho,
                                     double level);

// Small-reset-rate comparison point: MFPT of the walk that merely re-randomizes
// its direction "often" without ever resetting favorably — the ballistic bound
// level / (speed * rho).
double mfpt_rational(double level, double speed, double rho);

// Rightward motion = exponential jumps only (speed 0, rate jump_rate, scale
// 1/gamma); leftward mechanism irrelevant for first passage.
double sp_laplace_exp_jumps(double s, double x, Direction dir, double reset_rate,
                            double jump_rate, double gamma, double rho, double level);
struct MfptExpJumps {
    double plus;          // start at origin moving Plus
    double minus;         // start moving Minus (any x <= 0)
    double unconditional; // direction drawn from rho at t=0
};
MfptExpJumps mfpt_exp_jumps(double reset_rate, double jump_rate, double gamma,
                            double rho, double level);

} // namespace resetwalk
