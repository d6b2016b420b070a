#include "resetwalk/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace resetwalk {

namespace {

void require_finite_nonneg(double v, const char* name) {
    if (!std::isfinite(v) || v < 0.0)
        throw std::invalid_argument(std::string(name) + " must be finite and >= 0");
}

} // namespace

void validate_params(const ModelParams& p) {
    require_finite_nonneg(p.reset_rate, "reset_rate");
    require_finite_nonneg(p.speed_plus, "speed_plus");
    require_finite_nonneg(p.speed_minus, "speed_minus");
    require_finite_nonneg(p.jump_rate_plus, "jump_rate_plus");
    require_finite_nonneg(p.jump_rate_minus, "jump_rate_minus");
    if (!std::isfinite(p.direction_prob) || p.direction_prob < 0.0 || p.direction_prob > 1.0)
        throw std::invalid_argument("direction_prob must lie in [0,1]");

    // A direction the reset mechanism can select must be able to move:
    // zero speed with zero jump rate freezes the walker until the next
    // reset, which is a degenerate model we refuse to simulate.
    const bool plus_reachable = p.direction_prob > 0.0;
    const bool minus_reachable = p.direction_prob < 1.0;
    if (plus_reachable && p.speed_plus == 0.0 && p.jump_rate_plus == 0.0)
        throw std::invalid_argument(
            "plus direction is reachable (direction_prob > 0) but frozen: "
            "speed_plus and jump_rate_plus are both zero");
    if (minus_reachable && p.speed_minus == 0.0 && p.jump_rate_minus == 0.0)
        throw std::invalid_argument(
            "minus direction is reachable (direction_prob < 1) but frozen: "
            "speed_minus and jump_rate_minus are both zero");
}

ModelParams pure_drift_params(double reset_rate, double rho, double speed) {
    ModelParams p;
    p.reset_rate = reset_rate;
    p.direction_prob = rho;
    p.speed_plus = speed;
    p.speed_minus = speed;
    p.jump_rate_plus = 0.0;
    p.jump_rate_minus = 0.0;
    validate_params(p);
    return p;
}

ModelParams exp_jump_params(double reset_rate, double rho, double jump_rate,
                            double gamma, double minus_speed) {
    ModelParams p;
    p.reset_rate = reset_rate;
    p.direction_prob = rho;
    p.speed_plus = 0.0;
    p.speed_minus = minus_speed;
    p.jump_rate_plus = jump_rate;
    p.jump_rate_minus = 0.0;
    p.jump_law_plus = JumpLaw::exponential(gamma);
    validate_params(p);
    return p;
}

} // namespace resetwalk
