#pragma once

#include "resetwalk/jump_law.hpp"

namespace resetwalk {

// Parameters of the resetting walk.
//
// Between resets the walker moves at constant speed along its current
// direction (speed_plus rightward or speed_minus leftward) and takes
// direction-aligned jumps at Poisson rate jump_rate_{plus,minus} with lengths
// drawn from jump_law_{plus,minus}. Resets fire at Poisson rate reset_rate:
// the walker teleports to the origin and redraws its direction, Plus with
// probability direction_prob.
struct ModelParams {
    double reset_rate = 1.0;      // Lambda >= 0
    double direction_prob = 0.5;  // rho in [0,1], probability of Plus after a reset
    double speed_plus = 1.0;      // Gamma_+ >= 0
    double speed_minus = 1.0;     // Gamma_- >= 0
    double jump_rate_plus = 0.0;  // lambda_+ >= 0
    double jump_rate_minus = 0.0; // lambda_- >= 0
    JumpLaw jump_law_plus = JumpLaw::zero();
    JumpLaw jump_law_minus = JumpLaw::zero();

    double speed(Direction d) const { return d == Direction::plus ? speed_plus : speed_minus; }
    double jump_rate(Direction d) const { return d == Direction::plus ? jump_rate_plus : jump_rate_minus; }
    const JumpLaw& jump_law(Direction d) const { return d == Direction::plus ? jump_law_plus : jump_law_minus; }
};

// Throws std::invalid_argument when the parameters are outside the model
// class: negative rates or speeds, direction_prob outside [0,1], non-finite
// entries, or a reachable direction that is frozen (zero speed AND zero jump
// rate while resets can still select it).
void validate_params(const ModelParams& p);

// Convenience factories for the two closed-form families.
ModelParams pure_drift_params(double reset_rate, double rho, double speed);
ModelParams exp_jump_params(double reset_rate, double rho, double jump_rate,
                            double gamma, double minus_speed);

} // namespace resetwalk
