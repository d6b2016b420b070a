#include "resetwalk/optimize.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "resetwalk/analytic.hpp"

namespace resetwalk {

namespace {

double xi_residual(double xi, double rho) { return std::exp(xi) * (xi - 1.0) + rho; }

} // namespace

double xi_root(double rho) {
    if (!(rho >= 0.0 && rho <= 1.0))
        throw std::invalid_argument("xi_root: rho must lie in [0,1]");
    if (rho == 0.0) return 1.0;
    if (rho == 1.0) return 0.0;
    // f(xi) = exp(xi)(xi-1) + rho is strictly increasing on [0,1]
    // (f' = xi*exp(xi) > 0) with f(0) = rho-1 < 0 < rho = f(1).
    double lo = 0.0, hi = 1.0;
    double xi = 0.5;
    for (int iter = 0; iter < 200; ++iter) {
        const double f = xi_residual(xi, rho);
        if (f > 0.0)
            hi = xi;
        else
            lo = xi;
        const double fp = std::exp(xi) * xi;
        double next = xi - f / fp;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi); // bisection safeguard
        if (next == xi || hi - lo < 1e-17) break;
        xi = next;
    }
    return xi;
}

OptimumReport optimal_rate_pure_drift(double speed, double level, double rho) {
    if (!(speed > 0.0) || !(level > 0.0))
        throw std::invalid_argument("optimal_rate_pure_drift: speed and level must be > 0");
    if (!(rho > 0.0 && rho <= 1.0))
        throw std::invalid_argument(
            "optimal_rate_pure_drift: rho must lie in (0,1] (rho = 0 never reaches the level)");
    OptimumReport out;
    if (rho == 1.0) {
        // xi(1) = 0: the stationary point sits on the Lambda = 0 boundary and
        // any resetting only delays the ballistic crossing.
        out.regime = OptimumRegime::monotone_increasing;
        out.mfpt_star = level / speed;
        out.residual = 0.0;
        return out;
    }
    const double xi = xi_root(rho);
    out.regime = OptimumRegime::interior_minimum;
    out.lambda_star = speed * xi / level;
    out.mfpt_star = mfpt_pure_drift_unconditional(*out.lambda_star, speed, rho, level);
    out.residual = std::abs(xi_residual(xi, rho));
    return out;
}

OptimumReport optimal_rate_exp_jumps(double jump_rate, double gamma, double level,
                                     double rho) {
    if (!(jump_rate > 0.0) || !(gamma > 0.0) || !(level > 0.0))
        throw std::invalid_argument(
            "optimal_rate_exp_jumps: jump_rate, gamma and level must be > 0");
    if (!(rho > 0.0 && rho <= 1.0))
        throw std::invalid_argument(
            "optimal_rate_exp_jumps: rho must lie in (0,1] (rho = 0 never reaches the level)");
    OptimumReport out;
    if (rho == 1.0) {
        out.regime = OptimumRegime::monotone_increasing;
        out.mfpt_star = (1.0 + gamma * level) / jump_rate;
        out.residual = 0.0;
        return out;
    }
    const double xi = xi_root(rho);
    const double gl = gamma * level;
    if (xi < gl) {
        out.regime = OptimumRegime::interior_minimum;
        out.lambda_star = jump_rate * xi / (gl - xi);
        out.mfpt_star =
            mfpt_exp_jumps(*out.lambda_star, jump_rate, gamma, rho, level).unconditional;
        out.residual = std::abs(xi_residual(xi, rho));
        return out;
    }
    // xi >= gamma*level: the would-be stationary point lies beyond any finite
    // rate; the MFPT keeps decreasing toward its Lambda -> infinity limit.
    out.regime = OptimumRegime::monotone_decreasing;
    out.mfpt_star = std::exp(gl) / (jump_rate * rho);
    out.residual = 0.0;
    return out;
}

ApproxOptimum approx_optimal_pure_drift(RhoRegime regime, double speed, double level,
                                        double rho) {
    if (!(speed > 0.0) || !(level > 0.0))
        throw std::invalid_argument("approx_optimal_pure_drift: speed and level must be > 0");
    if (!(rho > 0.0 && rho <= 1.0))
        throw std::invalid_argument("approx_optimal_pure_drift: rho must lie in (0,1]");
    ApproxOptimum out;
    const double tau = level / speed;
    if (regime == RhoRegime::small_rho) {
        out.lambda_star = (1.0 - rho / std::numbers::e) / tau;
        out.mfpt_star = tau * std::numbers::e / rho;
    } else {
        const double root = std::sqrt(2.0 * (1.0 - rho));
        out.lambda_star = root / tau;
        out.mfpt_star = tau / (1.0 - root);
    }
    return out;
}

ApproxOptimum approx_optimal_exp_jumps(RhoRegime regime, double jump_rate, double gamma,
                                       double level, double rho) {
    if (!(jump_rate > 0.0) || !(gamma > 0.0) || !(level > 0.0))
        throw std::invalid_argument(
            "approx_optimal_exp_jumps: jump_rate, gamma and level must be > 0");
    if (!(rho > 0.0 && rho <= 1.0))
        throw std::invalid_argument("approx_optimal_exp_jumps: rho must lie in (0,1]");
    ApproxOptimum out;
    const double gl = gamma * level;
    if (regime == RhoRegime::small_rho) {
        out.lambda_star =
            jump_rate * (std::numbers::e - rho) / ((gl - 1.0) * std::numbers::e + rho);
        out.mfpt_star = (gl / jump_rate) * std::numbers::e / rho;
    } else {
        const double root = std::sqrt(2.0 * (1.0 - rho));
        out.lambda_star = jump_rate * root / (gl - root);
        out.mfpt_star = (gl / (1.0 - root) + 1.0) / jump_rate;
    }
    return out;
}

OptimumReport minimize_mfpt_numeric(const ModelParams& p, double level, double bracket_lo,
                                    double bracket_hi, double rel_tol,
                                    const InversionConfig& cfg) {
    if (!(bracket_lo > 0.0) || !(bracket_hi > bracket_lo))
        throw std::invalid_argument("minimize_mfpt_numeric: need 0 < bracket_lo < bracket_hi");
    if (!(rel_tol > 0.0 && rel_tol < 0.1))
        throw std::invalid_argument("minimize_mfpt_numeric: rel_tol out of range");
    if (!(p.direction_prob > 0.0))
        throw std::invalid_argument("minimize_mfpt_numeric: direction_prob must be > 0");

    auto mfpt_at = [&](double u) {
        ModelParams q = p;
        q.reset_rate = std::exp(u);
        return mfpt_general_unconditional(q, level, cfg);
    };

    // Golden section in log(Lambda): the bracket spans decades, and relative
    // accuracy in Lambda is an absolute interval in u.
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = std::log(bracket_lo);
    double b = std::log(bracket_hi);
    const double tol_u = rel_tol;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = mfpt_at(c);
    double fd = mfpt_at(d);
    while (b - a > tol_u) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = mfpt_at(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = mfpt_at(d);
        }
    }
    const double u_star = 0.5 * (a + b);

    OptimumReport out;
    const double u_lo = std::log(bracket_lo);
    const double u_hi = std::log(bracket_hi);
    const double edge_margin = 10.0 * tol_u;
    if (u_star - u_lo <= edge_margin) {
        out.regime = OptimumRegime::monotone_increasing;
        out.mfpt_star = mfpt_at(u_lo);
        out.residual = 0.0;
        return out;
    }
    if (u_hi - u_star <= edge_margin) {
        out.regime = OptimumRegime::monotone_decreasing;
        out.mfpt_star = mfpt_at(u_hi);
        out.residual = 0.0;
        return out;
    }
    out.regime = OptimumRegime::interior_minimum;
    out.lambda_star = std::exp(u_star);
    out.mfpt_star = mfpt_at(u_star);
    // Normalized stationarity check: |dT/dLambda| * Lambda* / T* via central
    // difference one tolerance-width out.
    const double h = 10.0 * tol_u;
    const double slope = (mfpt_at(u_star + h) - mfpt_at(u_star - h)) / (2.0 * h);
    out.residual = std::abs(slope) / out.mfpt_star;
    return out;
}

} // namespace resetwalk
