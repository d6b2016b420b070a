#include <cmath>

#include "doctest.h"
#include "resetwalk/analytic.hpp"
#include "resetwalk/optimize.hpp"

using namespace resetwalk;

TEST_CASE("xi(rho) solves exp(xi)(xi-1) + rho = 0 on [0,1]") {
    CHECK(xi_root(0.0) == 1.0);
    CHECK(xi_root(1.0) == 0.0);
    CHECK(xi_root(0.5) == doctest::Approx(0.768039047013466).epsilon(1e-12));

    double prev = 1.0 + 1e-15;
    for (int i = 0; i <= 100; ++i) {
        const double rho = i / 100.0;
        const double xi = xi_root(rho);
        CHECK(xi >= 0.0);
        CHECK(xi <= 1.0);
        CHECK(xi < prev); // strictly decreasing in rho
        prev = xi;
        CHECK(std::abs(std::exp(xi) * (xi - 1.0) + rho) <= 1e-12);
    }

    CHECK_THROWS_AS((void)xi_root(-0.1), std::invalid_argument);
    CHECK_THROWS_AS((void)xi_root(1.1), std::invalid_argument);
}

TEST_CASE("pure-drift optimal reset rate") {
    const double speed = 1.3, level = 0.7, rho = 0.5;
    const OptimumReport r = optimal_rate_pure_drift(speed, level, rho);
    REQUIRE(r.regime == OptimumRegime::interior_minimum);
    REQUIRE(r.lambda_star.has_value());
    CHECK(*r.lambda_star ==
          doctest::Approx(speed * xi_root(rho) / level).epsilon(1e-13));
    CHECK(r.mfpt_star ==
          doctest::Approx(mfpt_pure_drift_unconditional(*r.lambda_star, speed, rho, level))
              .epsilon(1e-13));
    CHECK(r.residual <= 1e-12);

    // The reported minimum really is lowest among neighbouring rates.
    for (double f : {0.8, 0.9, 1.1, 1.25}) {
        CHECK(mfpt_pure_drift_unconditional(*r.lambda_star * f, speed, rho, level) >
              r.mfpt_star);
    }

    // rho = 1: never resetting is best, the walk is already ballistic.
    const OptimumReport mono = optimal_rate_pure_drift(speed, level, 1.0);
    CHECK(mono.regime == OptimumRegime::monotone_increasing);
    CHECK(!mono.lambda_star.has_value());
    CHECK(mono.mfpt_star == doctest::Approx(level / speed).epsilon(1e-14));

    CHECK_THROWS_AS((void)optimal_rate_pure_drift(speed, level, 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)optimal_rate_pure_drift(0.0, level, rho),
                    std::invalid_argument);
}

TEST_CASE("exponential-jump optimal reset rate and the regime flip") {
    const double jump_rate = 1.0, gamma = 4.0, level = 1.0; // gamma*level = 4

    for (double rho : {0.5, 0.9}) {
        const OptimumReport r = optimal_rate_exp_jumps(jump_rate, gamma, level, rho);
        REQUIRE(r.regime == OptimumRegime::interior_minimum);
        const double xi = xi_root(rho);
        CHECK(*r.lambda_star ==
              doctest::Approx(jump_rate * xi / (gamma * level - xi)).epsilon(1e-13));
        const MfptExpJumps at_star =
            mfpt_exp_jumps(*r.lambda_star, jump_rate, gamma, rho, level);
        CHECK(r.mfpt_star == doctest::Approx(at_star.unconditional).epsilon(1e-13));
        for (double f : {0.85, 1.2})
            CHECK(mfpt_exp_jumps(*r.lambda_star * f, jump_rate, gamma, rho, level)
                      .unconditional > r.mfpt_star);
    }

    // Tight targets (gamma*level <= xi(rho)) leave no interior optimum: the
    // faster you reset, the better. At gamma*level = 0.5 the flip sits
    // between rho = 0.824 and rho = 0.825.
    const OptimumReport lo = optimal_rate_exp_jumps(1.0, 0.5, 1.0, 0.824);
    CHECK(lo.regime == OptimumRegime::monotone_decreasing);
    CHECK(!lo.lambda_star.has_value());
    const OptimumReport hi = optimal_rate_exp_jumps(1.0, 0.5, 1.0, 0.825);
    CHECK(hi.regime == OptimumRegime::interior_minimum);

    // rho = 1 degenerates to the no-reset boundary.
    const OptimumReport mono = optimal_rate_exp_jumps(jump_rate, gamma, level, 1.0);
    CHECK(mono.regime == OptimumRegime::monotone_increasing);
    CHECK(mono.mfpt_star ==
          doctest::Approx((1.0 + gamma * level) / jump_rate).epsilon(1e-14));

    CHECK_THROWS_AS((void)optimal_rate_exp_jumps(jump_rate, gamma, level, 0.0),
                    std::invalid_argument);
}

TEST_CASE("numeric minimizer agrees with the closed-form optima") {
    const InversionConfig talbot = InversionConfig::talbot(32);

    {
        const ModelParams p = pure_drift_params(1.0, 0.5, 1.0);
        const OptimumReport closed = optimal_rate_pure_drift(1.0, 1.0, 0.5);
        const OptimumReport num = minimize_mfpt_numeric(p, 1.0, 1e-3, 1e3, 1e-6, talbot);
        REQUIRE(num.regime == OptimumRegime::interior_minimum);
        CHECK(std::abs(*num.lambda_star - *closed.lambda_star) / *closed.lambda_star <
              1e-4);
        CHECK(std::abs(num.mfpt_star - closed.mfpt_star) / closed.mfpt_star < 1e-6);
    }
    {
        const ModelParams p = exp_jump_params(1.0, 0.9, 1.0, 4.0, 1.0);
        const OptimumReport closed = optimal_rate_exp_jumps(1.0, 4.0, 1.0, 0.9);
        const OptimumReport num = minimize_mfpt_numeric(p, 1.0, 1e-3, 1e3, 1e-6, talbot);
        REQUIRE(num.regime == OptimumRegime::interior_minimum);
        CHECK(std::abs(*num.lambda_star - *closed.lambda_star) / *closed.lambda_star <
              1e-4);
    }
    {
        // A monotone-decreasing family drives the minimizer into the upper
        // bracket endpoint; it must say so rather than fake an optimum.
        const ModelParams p = exp_jump_params(1.0, 0.3, 1.0, 0.5, 1.0);
        const OptimumReport num = minimize_mfpt_numeric(p, 1.0, 1e-2, 1e2, 1e-6, talbot);
        CHECK(num.regime == OptimumRegime::monotone_decreasing);
        CHECK(!num.lambda_star.has_value());
    }
}

TEST_CASE("printed expansions approximate the exact optima at the rho edges") {
    {
        const double rho = 0.05;
        const OptimumReport exact = optimal_rate_pure_drift(1.0, 1.0, rho);
        const ApproxOptimum app =
            approx_optimal_pure_drift(RhoRegime::small_rho, 1.0, 1.0, rho);
        CHECK(std::abs(app.lambda_star - *exact.lambda_star) / *exact.lambda_star < 0.15);
        CHECK(std::abs(app.mfpt_star - exact.mfpt_star) / exact.mfpt_star < 0.15);
    }
    {
        const double rho = 0.95;
        const OptimumReport exact = optimal_rate_pure_drift(1.0, 1.0, rho);
        const ApproxOptimum app =
            approx_optimal_pure_drift(RhoRegime::large_rho, 1.0, 1.0, rho);
        CHECK(std::abs(app.lambda_star - *exact.lambda_star) / *exact.lambda_star < 0.15);
    }
    {
        const double rho = 0.95; // stays interior because gamma*level = 4 > xi
        const OptimumReport exact = optimal_rate_exp_jumps(1.0, 4.0, 1.0, rho);
        const ApproxOptimum app =
            approx_optimal_exp_jumps(RhoRegime::large_rho, 1.0, 4.0, 1.0, rho);
        CHECK(std::abs(app.lambda_star - *exact.lambda_star) / *exact.lambda_star < 0.15);
    }
}
