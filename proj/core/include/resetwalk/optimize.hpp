#pragma once

#include <optional>

#include "resetwalk/inversion.hpp"
#include "resetwalk/model.hpp"

namespace resetwalk {

// How the mean first-passage time behaves over the admissible reset rates.
enum class OptimumRegime {
    interior_minimum,    // a finite Lambda* > 0 minimizes the MFPT
    monotone_decreasing, // MFPT decreases toward its Lambda -> infinity limit
    monotone_increasing, // MFPT increases from its Lambda -> 0 limit
};

struct OptimumReport {
    // Present iff regime == interior_minimum.
    std::optional<double> lambda_star;
    // The minimal MFPT; for monotone regimes, the limiting/bracket-edge value.
    double mfpt_star = 0.0;
    OptimumRegime regime = OptimumRegime::interior_minimum;
    // Stationarity residual at the optimum: |exp(xi)(xi-1) + rho| for the
    // closed forms, |dT/dLambda| * Lambda*/T* for the numeric minimizer.
    double residual = 0.0;
};

// Root xi(rho) in [0,1] of exp(xi)*(xi - 1) + rho = 0; the optimal reset rate
// of both closed-form families is a rescaling of it. Safeguarded Newton with
// a bisection fallback; residual reaches the double-precision floor
// (<= 1e-12 guaranteed). xi(0) = 1 and xi(1) = 0 exactly.
double xi_root(double rho);

// Pure drift: Lambda* = speed * xi(rho) / level. rho = 1 degenerates to the
// Lambda -> 0 boundary (ballistic is best): monotone_increasing with
// mfpt_star = level/speed. rho = 0 is an error (level never reachable).
OptimumReport optimal_rate_pure_drift(double speed, double level, double rho);

// Exponential jumps (no rightward drift): Lambda*/lambda =
// xi(rho) / (gamma*level - xi(rho)) when xi(rho) < gamma*level; otherwise the
// MFPT decreases monotonically toward exp(gamma*level)/(lambda*rho) as
// Lambda -> infinity (reported as monotone_decreasing; the boundary
// xi = gamma*level is classified the same way since no finite stationary
// point exists). rho = 1 degenerates to Lambda -> 0: monotone_increasing
// with mfpt_star = (1 + gamma*level)/lambda.
OptimumReport optimal_rate_exp_jumps(double jump_rate, double gamma, double level,
                                     double rho);

// Printed small-/large-rho expansions of the optima.
enum class RhoRegime { small_rho, large_rho };
struct ApproxOptimum {
    double lambda_star = 0.0;
    double mfpt_star = 0.0;
};
ApproxOptimum approx_optimal_pure_drift(RhoRegime regime, double speed, double level,
                                        double rho);
ApproxOptimum approx_optimal_exp_jumps(RhoRegime regime, double jump_rate, double gamma,
                                       double level, double rho);

// Golden-section minimization of Lambda |-> mfpt_general_unconditional over
// [bracket_lo, bracket_hi] (worked in log-Lambda; rel_tol is the relative
// accuracy of the reported Lambda*). Convergence onto a bracket endpoint is
// reported as the corresponding monotone regime with the endpoint MFPT.
// p.reset_rate is ignored (swept over the bracket).
OptimumReport minimize_mfpt_numeric(const ModelParams& p, double level, double bracket_lo,
                                    double bracket_hi, double rel_tol = 1e-6,
                                    const InversionConfig& cfg = {});

} // namespace resetwalk
