#include "resetwalk/analytic.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace resetwalk {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Dispersion denominator of one direction channel: s + Lambda +
// lambda_d * (1 - h~_d(omega)) -/+ i*omega*Gamma_d (minus for Plus, plus for
// Minus: the drift term enters with the sign of the displacement).
std::complex<double> channel_denominator(const ModelParams& p, double omega,
                                         std::complex<double> s, Direction dir) {
    const std::complex<double> i(0.0, 1.0);
    const std::complex<double> jump_part =
        p.jump_rate(dir) * (1.0 - p.jump_law(dir).fourier(omega, dir));
    const std::complex<double> drift_part =
        (dir == Direction::plus ? -i : i) * omega * p.speed(dir);
    return s + p.reset_rate + jump_part + drift_part;
}

} // namespace

std::complex<double> detail::propagator_fl_continued(const ModelParams& p, double omega,
                                                     std::complex<double> s, double x0,
                                                     Direction dir) {
    const std::complex<double> i(0.0, 1.0);
    const std::complex<double> initial =
        std::exp(i * omega * x0) / channel_denominator(p, omega, s, dir);
    // Renewal terms: walkers that have reset at least once carry no memory of
    // (x0, dir); they restart from the origin in a rho-mixed direction.
    const std::complex<double> renewed_plus =
        (p.reset_rate * p.direction_prob / s) / channel_denominator(p, omega, s, Direction::plus);
    const std::complex<double> renewed_minus =
        (p.reset_rate * (1.0 - p.direction_prob) / s) /
        channel_denominator(p, omega, s, Direction::minus);
    return initial + renewed_plus + renewed_minus;
}

std::complex<double> propagator_fl(const ModelParams& p, double omega,
                                   std::complex<double> s, double x0, Direction dir) {
    validate_params(p);
    if (!(s.real() > 0.0))
        throw std::invalid_argument("propagator_fl: requires Re(s) > 0");
    if (dir == Direction::plus ? (x0 < 0.0) : (x0 > 0.0))
        throw std::invalid_argument("propagator_fl: start position opposes start direction");
    return detail::propagator_fl_continued(p, omega, s, x0, dir);
}

std::complex<double> stationary_cf(const ModelParams& p, double omega) {
    validate_params(p);
    if (!(p.reset_rate > 0.0))
        throw std::invalid_argument("stationary_cf: requires reset_rate > 0");
    // Normalization is exact by construction: at omega = 0 both channel
    // denominators collapse to Lambda and the sum is rho + (1-rho).
    if (omega == 0.0) return {1.0, 0.0};
    const std::complex<double> plus =
        p.reset_rate * p.direction_prob / channel_denominator(p, omega, 0.0, Direction::plus);
    const std::complex<double> minus =
        p.reset_rate * (1.0 - p.direction_prob) /
        channel_denominator(p, omega, 0.0, Direction::minus);
    return plus + minus;
}

StationaryPoint stationary_density_exp_drift(double reset_rate, double jump_rate,
                                             double gamma, double minus_speed,
                                             double rho, double x) {
    if (!(reset_rate > 0.0))
        throw std::invalid_argument("stationary_density_exp_drift: reset_rate must be > 0");
    if (!(gamma > 0.0))
        throw std::invalid_argument("stationary_density_exp_drift: gamma must be > 0");
    if (!(rho >= 0.0 && rho <= 1.0))
        throw std::invalid_argument("stationary_density_exp_drift: rho must lie in [0,1]");
    if (rho > 0.0 && !(jump_rate > 0.0))
        throw std::invalid_argument(
            "stationary_density_exp_drift: jump_rate must be > 0 when rho > 0 "
            "(rightward motion is jumps only in this special case)");
    if (rho < 1.0 && !(minus_speed > 0.0))
        throw std::invalid_argument(
            "stationary_density_exp_drift: minus_speed must be > 0 when rho < 1");

    const double atom = reset_rate * rho / (reset_rate + jump_rate);
    StationaryPoint out{0.0, atom};
    if (x >= 0.0) {
        // Right wing: exp tail with rate beta_+ = Lambda*gamma/(Lambda+lambda);
        // x = 0 returns the right limit (the atom is reported separately).
        if (rho > 0.0) {
            const double beta = reset_rate * gamma / (reset_rate + jump_rate);
            out.density = atom * (gamma * jump_rate / (reset_rate + jump_rate)) *
                          std::exp(-beta * x);
        }
    } else {
        if (rho < 1.0) {
            out.density = (reset_rate * (1.0 - rho) / minus_speed) *
                          std::exp(reset_rate * x / minus_speed);
        }
    }
    return out;
}

double tail_exponent_beta(double reset_rate, double speed, double jump_rate,
                          double mean_jump) {
    if (!(reset_rate >= 0.0))
        throw std::invalid_argument("tail_exponent_beta: reset_rate must be >= 0");
    const double transport = speed + jump_rate * mean_jump;
    if (!(transport > 0.0))
        throw std::invalid_argument("tail_exponent_beta: speed + jump_rate*mean_jump must be > 0");
    return reset_rate / transport;
}

// ---------------------------------------------------------------------------
// Pure drift closed forms
// ---------------------------------------------------------------------------

namespace {

void check_pure_drift_domain(double s, double x, Direction dir, double reset_rate,
                             double speed, double rho, double level) {
    if (!(level > 0.0)) throw std::invalid_argument("pure drift SP: level must be > 0");
    if (!(speed > 0.0)) throw std::invalid_argument("pure drift SP: speed must be > 0");
    if (!(reset_rate >= 0.0)) throw std::invalid_argument("pure drift SP: reset_rate must be >= 0");
    if (!(rho >= 0.0 && rho <= 1.0)) throw std::invalid_argument("pure drift SP: rho must lie in [0,1]");
    if (!(s >= 0.0)) throw std::invalid_argument("pure drift SP: s must be >= 0");
    if (dir == Direction::plus) {
        if (x < 0.0 || x > level)
            throw std::invalid_argument("pure drift SP: Plus start needs 0 <= x <= level");
    } else if (x > 0.0) {
        throw std::invalid_argument("pure drift SP: Minus start needs x <= 0");
    }
}

} // namespace

double sp_laplace_pure_drift(double s, double x, Direction dir, double reset_rate,
                             double speed, double rho, double level) {
    check_pure_drift_domain(s, x, dir, reset_rate, speed, rho, level);
    const double shifted = s + reset_rate;
    const double denom = s + reset_rate * rho * std::exp(-shifted * level / speed);
    if (dir == Direction::plus) {
        const double numer = 1.0 - std::exp(-shifted * (level - x) / speed);
        if (denom == 0.0) {
            // s = 0 with Lambda*rho = 0. No resets toward the level: the walk
            // either crosses ballistically (Lambda = 0) or never (rho = 0).
            if (reset_rate == 0.0) return (level - x) / speed; // limit s->0
            return kInf;
        }
        return numer / denom;
    }
    if (denom == 0.0) return kInf; // leftward start, no favorable resets
    return 1.0 / denom;
}

double mfpt_pure_drift(double x, Direction dir, double reset_rate, double speed,
                       double rho, double level) {
    check_pure_drift_domain(0.0, x, dir, reset_rate, speed, rho, level);
    if (!(reset_rate > 0.0))
        throw std::invalid_argument("mfpt_pure_drift: reset_rate must be > 0");
    if (rho == 0.0) return kInf;
    const double scale = reset_rate / speed;
    if (dir == Direction::plus)
        return (std::exp(scale * level) - std::exp(scale * x)) / (reset_rate * rho);
    return std::exp(scale * level) / (reset_rate * rho);
}

double mfpt_pure_drift_unconditional(double reset_rate, double speed, double rho,
                                     double level) {
    check_pure_drift_domain(0.0, 0.0, Direction::plus, reset_rate, speed, rho, level);
    if (!(reset_rate > 0.0))
        throw std::invalid_argument("mfpt_pure_drift_unconditional: reset_rate must be > 0");
    if (rho == 0.0) return kInf;
    return (std::exp(reset_rate * level / speed) / rho - 1.0) / reset_rate;
}

double mfpt_rational(double level, double speed, double rho) {
    if (!(level > 0.0) || !(speed > 0.0))
        throw std::invalid_argument("mfpt_rational: level and speed must be > 0");
    if (rho == 0.0) return kInf;
    return level / (speed * rho);
}

// ---------------------------------------------------------------------------
// Exponential-jump closed forms (rightward motion is jumps only)
// ---------------------------------------------------------------------------

namespace {

void check_exp_jumps_domain(double s, double x, Direction dir, double reset_rate,
                            double jump_rate, double gamma, double rho, double level) {
    if (!(level > 0.0)) throw std::invalid_argument("exp-jump SP: level must be > 0");
    if (!(gamma > 0.0)) throw std::invalid_argument("exp-jump SP: gamma must be > 0");
    if (!(jump_rate > 0.0)) throw std::invalid_argument("exp-jump SP: jump_rate must be > 0");
    if (!(reset_rate > 0.0)) throw std::invalid_argument("exp-jump SP: reset_rate must be > 0");
    if (!(rho >= 0.0 && rho <= 1.0)) throw std::invalid_argument("exp-jump SP: rho must lie in [0,1]");
    if (!(s >= 0.0)) throw std::invalid_argument("exp-jump SP: s must be >= 0");
    if (dir == Direction::plus) {
        if (x < 0.0 || x > level)
            throw std::invalid_argument("exp-jump SP: Plus start needs 0 <= x <= level");
    } else if (x > 0.0) {
        throw std::invalid_argument("exp-jump SP: Minus start needs x <= 0");
    }
}

} // namespace

double sp_laplace_exp_jumps(double s, double x, Direction dir, double reset_rate,
                            double jump_rate, double gamma, double rho, double level) {
    check_exp_jumps_domain(s, x, dir, reset_rate, jump_rate, gamma, rho, level);
    if (s == 0.0 && rho == 0.0) return kInf;
    const double shifted = s + reset_rate;            // s + Lambda
    const double total = shifted + jump_rate;          // s + Lambda + lambda
    const double alpha = gamma * shifted / total;      // spatial decay of the kernel
    const double edge = std::exp(-alpha * level);
    // Survival transform of the origin-started rightward walker.
    const double origin_plus = (total - jump_rate * edge) /
                               (s * total + reset_rate * jump_rate * rho * edge);
    if (dir == Direction::plus) {
        if (x == 0.0) return origin_plus;
        const double prefactor = (1.0 + reset_rate * rho * origin_plus) /
                                 (s + reset_rate * rho);
        return prefactor *
               (1.0 - (jump_rate / total) * std::exp(-alpha * (level - x)));
    }
    return (1.0 + reset_rate * rho * origin_plus) / (s + reset_rate * rho);
}

MfptExpJumps mfpt_exp_jumps(double reset_rate, double jump_rate, double gamma,
                            double rho, double level) {
    check_exp_jumps_domain(0.0, 0.0, Direction::plus, reset_rate, jump_rate, gamma, rho, level);
    if (rho == 0.0) return {kInf, kInf, kInf};
    const double total = reset_rate + jump_rate;
    const double alpha0 = gamma * reset_rate / total;
    const double grow = std::exp(alpha0 * level);
    MfptExpJumps out;
    out.plus = ((total / jump_rate) * grow - 1.0) / (reset_rate * rho);
    out.minus = (total / (reset_rate * jump_rate * rho)) * grow;
    out.unconditional = ((total / (jump_rate * rho)) * grow - 1.0) / reset_rate;
    return out;
}

} // namespace resetwalk
