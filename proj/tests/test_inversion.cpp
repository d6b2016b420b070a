#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "resetwalk/analytic.hpp"
#include "resetwalk/inversion.hpp"

using namespace resetwalk;
using cplx = std::complex<double>;

namespace {
struct Pair {
    std::function<cplx(cplx)> fhat;
    std::function<double(double)> f;
};

// Transform/original pairs spanning constants, exponentials, a ramp and a
// saturating relaxation. The exponential decay rate is kept moderate (1/2):
// fixed-Talbot roundoff grows like exp(2*nodes/5)*eps, so originals that decay
// to ~1e-13 of their initial size cannot meet a relative target in doubles.
std::vector<Pair> reference_pairs() {
    return {
        {[](cplx r) { return 1.0 / r; }, [](double) { return 1.0; }},
        {[](cplx r) { return 1.0 / (r + 1.0); }, [](double t) { return std::exp(-t); }},
        {[](cplx r) { return 1.0 / (r * r); }, [](double t) { return t; }},
        {[](cplx r) { return 1.0 / (r + 0.5); }, [](double t) { return std::exp(-0.5 * t); }},
        {[](cplx r) { return 1.0 / (r * (r + 2.0)); },
         [](double t) { return 0.5 * (1.0 - std::exp(-2.0 * t)); }},
    };
}

// Exact pure-drift survival by its reset-delay series (independent oracle;
// same recursion as the one cross-checked against quadrature elsewhere).
double series_minus(double t, double reset_rate, double rho, double speed, double level) {
    const double T = level / speed;
    const double c0 = reset_rate * rho * std::exp(-reset_rate * T);
    double sum = 0.0;
    double coef = 1.0;
    for (int n = 0; n * T <= t; ++n) {
        sum += coef * std::pow(t - n * T, n);
        coef *= -c0 / (n + 1);
    }
    return sum;
}
double series_plus(double t, double x, double reset_rate, double rho, double speed,
                   double level) {
    const double tstar = (level - x) / speed;
    double v = series_minus(t, reset_rate, rho, speed, level);
    if (t >= tstar)
        v -= std::exp(-reset_rate * tstar) *
             series_minus(t - tstar, reset_rate, rho, speed, level);
    return v;
}
} // namespace

TEST_CASE("both back-ends invert the reference pairs") {
    const auto pairs = reference_pairs();
    for (double t : {0.1, 1.0, 10.0}) {
        for (const Pair& pr : pairs) {
            const double exact = pr.f(t);

            // Talbot: geometric convergence; 24 nodes keeps the exp(2M/5)*eps
            // roundoff amplification two decades under the 1e-7 target.
            const double tv = laplace_invert(pr.fhat, t, InversionConfig::talbot(24));
            CHECK(std::abs(tv - exact) / std::abs(exact) < 1e-7);

            // Gaver-Stehfest at order 14: accuracy is scale-relative (the
            // Salzer weights amplify absolute noise), so normalize by
            // max(|f|, 1).
            const double gv = laplace_invert(pr.fhat, t, InversionConfig::gaver(14));
            CHECK(std::abs(gv - exact) / std::max(std::abs(exact), 1.0) < 1e-4);
        }
    }
}

TEST_CASE("inversion config is validated") {
    auto fhat_real = [](double r) { return 1.0 / r; };
    auto fhat_cplx = [](cplx r) { return 1.0 / r; };

    CHECK_THROWS_AS((void)laplace_invert(fhat_real, 0.0), std::invalid_argument);
    CHECK_THROWS_AS((void)laplace_invert(fhat_cplx, -1.0, InversionConfig::talbot()),
                    std::invalid_argument);

    // A transform callable only on the real axis cannot ride the Talbot contour.
    CHECK_THROWS_AS((void)laplace_invert(fhat_real, 1.0, InversionConfig::talbot()),
                    std::invalid_argument);

    CHECK_THROWS_AS((void)laplace_invert(fhat_real, 1.0, InversionConfig::gaver(13)),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)laplace_invert(fhat_real, 1.0, InversionConfig::gaver(22)),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)laplace_invert(fhat_cplx, 1.0, InversionConfig::talbot(2)),
                    std::invalid_argument);
}

TEST_CASE("the two back-ends agree on the first-passage kernel") {
    struct Case {
        ModelParams p;
        double tol;
    };
    std::vector<Case> cases;
    cases.push_back({pure_drift_params(0.5, 0.5, 1.0), 1e-5});
    cases.push_back({exp_jump_params(0.5, 0.5, 0.5, 2.0, 1.0), 1e-5});
    // Deterministic laws put lag-pole strings on the negative real axis, which
    // Gaver-Stehfest feels more than Talbot: looser agreement target.
    ModelParams det = pure_drift_params(0.5, 0.5, 1.0);
    det.jump_rate_plus = 0.1;
    det.jump_law_plus = JumpLaw::deterministic(5.0);
    cases.push_back({det, 1e-3});

    for (const Case& c : cases) {
        double worst = 0.0;
        for (int i = 1; i <= 32; ++i) {
            const double z = 2.0 * i / 32.0;
            const double a = first_passage_kernel(c.p, z, 0.0, InversionConfig::talbot(32));
            const double b = first_passage_kernel(c.p, z, 0.0, InversionConfig::gaver(14));
            worst = std::max(worst, std::abs(a - b) / std::max(std::abs(a), 1e-30));
        }
        CHECK(worst < c.tol);
    }

    const ModelParams p = pure_drift_params(1.0, 0.5, 1.0);
    CHECK_THROWS_AS((void)first_passage_kernel(p, -0.1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS((void)first_passage_kernel(p, 1.0, -0.1), std::invalid_argument);
}

TEST_CASE("kernel-route MFPT reproduces the closed forms") {
    const InversionConfig talbot = InversionConfig::talbot(32);
    double worst_pd = 0.0, worst_ej = 0.0;
    for (int i = 0; i < 10; ++i) {
        const double rho = 0.15 + 0.08 * i;
        const double lam = 0.3 + 0.3 * i;

        const ModelParams pd = pure_drift_params(lam, rho, 1.0);
        const double pd_plus = mfpt_general(pd, 1.0, 0.2, Direction::plus, talbot);
        const double pd_plus_ref = mfpt_pure_drift(0.2, Direction::plus, lam, 1.0, rho, 1.0);
        const double pd_minus = mfpt_general(pd, 1.0, -0.3, Direction::minus, talbot);
        const double pd_minus_ref =
            mfpt_pure_drift(-0.3, Direction::minus, lam, 1.0, rho, 1.0);
        worst_pd = std::max(worst_pd, std::abs(pd_plus - pd_plus_ref) / pd_plus_ref);
        worst_pd = std::max(worst_pd, std::abs(pd_minus - pd_minus_ref) / pd_minus_ref);

        const ModelParams ej = exp_jump_params(lam, rho, 1.0, 4.0, 1.0);
        const double ej_plus = mfpt_general(ej, 1.0, 0.3, Direction::plus, talbot);
        const double ej_plus_ref =
            sp_laplace_exp_jumps(0.0, 0.3, Direction::plus, lam, 1.0, 4.0, rho, 1.0);
        const double ej_minus = mfpt_general(ej, 1.0, -0.5, Direction::minus, talbot);
        const double ej_minus_ref = mfpt_exp_jumps(lam, 1.0, 4.0, rho, 1.0).minus;
        worst_ej = std::max(worst_ej, std::abs(ej_plus - ej_plus_ref) / ej_plus_ref);
        worst_ej = std::max(worst_ej, std::abs(ej_minus - ej_minus_ref) / ej_minus_ref);
    }
    CHECK(worst_pd < 1e-6);
    CHECK(worst_ej < 1e-6);

    // The default (Gaver-Stehfest kernel) route is coarser but still tight.
    const ModelParams pd = pure_drift_params(1.0, 0.5, 1.0);
    const double gs = mfpt_general_unconditional(pd, 1.0);
    CHECK(std::abs(gs - 4.43656365691809047) / 4.43656365691809047 < 5e-4);

    // Unreachable-level semantics.
    CHECK(std::isinf(mfpt_general_unconditional(pure_drift_params(1.0, 0.0, 1.0), 1.0)));
    ModelParams free_minus = pure_drift_params(1.0, 0.5, 1.0);
    free_minus.reset_rate = 0.0;
    CHECK(std::isinf(mfpt_general(free_minus, 1.0, -0.2, Direction::minus)));

    // A Minus start forgets x (it must wait for a reset regardless).
    const ModelParams ej = exp_jump_params(0.9, 0.4, 1.0, 4.0, 1.0);
    const double a = mfpt_general(ej, 1.0, -0.2, Direction::minus, talbot);
    const double b = mfpt_general(ej, 1.0, -4.0, Direction::minus, talbot);
    CHECK(std::abs(a - b) / a < 1e-10);

    // MFPT grows with the level.
    CHECK(mfpt_general_unconditional(pd, 2.0, talbot) >
          mfpt_general_unconditional(pd, 1.0, talbot));
}

TEST_CASE("a dense stream of tiny deterministic jumps behaves like drift") {
    ModelParams p;
    p.reset_rate = 1.0;
    p.direction_prob = 0.5;
    p.speed_plus = 0.0;
    p.jump_rate_plus = 100.0;
    p.jump_law_plus = JumpLaw::deterministic(0.01); // mean displacement rate 1
    p.speed_minus = 1.0;
    const double got = mfpt_general_unconditional(p, 1.0, InversionConfig::talbot(32));
    const double drift_ref = mfpt_pure_drift_unconditional(1.0, 1.0, 0.5, 1.0);
    CHECK(std::abs(got - drift_ref) / drift_ref < 1e-2);
}

TEST_CASE("survival via double inversion matches the exact delay series") {
    const double lam = 1.0, rho = 0.5, speed = 1.0, level = 1.0;
    const ModelParams p = pure_drift_params(lam, rho, speed);

    CHECK(survival_general(p, level, 0.0, Direction::plus, 0.0) == 1.0);

    // Early times: the curve starts at 1.
    const double early = survival_general(p, level, 0.0, Direction::plus, 1e-6);
    CHECK(std::abs(early - 1.0) < 1e-3);

    double worst = 0.0;
    for (double t : {0.4, 1.4, 2.4, 3.6, 5.2, 8.4}) {
        const double got = survival_general(p, level, 0.0, Direction::plus, t);
        const double exact = series_plus(t, 0.0, lam, rho, speed, level);
        CHECK(got >= 0.0);
        CHECK(got <= 1.0);
        worst = std::max(worst, std::abs(got - exact));
    }
    CHECK(worst < 5e-3);

    // Minus starts obey the same series without the ballistic atom.
    double worst_minus = 0.0;
    for (double t : {0.4, 1.4, 3.6}) {
        const double got = survival_general(p, level, -0.7, Direction::minus, t);
        const double exact = series_minus(t, lam, rho, speed, level);
        worst_minus = std::max(worst_minus, std::abs(got - exact));
    }
    CHECK(worst_minus < 5e-3);

    CHECK_THROWS_AS((void)survival_general(p, -1.0, 0.0, Direction::plus, 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)survival_general(p, 1.0, 2.0, Direction::plus, 1.0),
                    std::invalid_argument);
}

TEST_CASE("time-domain characteristic function") {
    const ModelParams p = exp_jump_params(1.0, 0.5, 1.0, 1.0, 1.0);

    // omega = 0 is total mass.
    const cplx at0 = char_function_t(p, 0.0, 3.0, 0.0, Direction::plus);
    CHECK(std::abs(at0 - 1.0) < 1e-10);

    // |E exp(i omega X)| <= 1 up to inversion noise.
    for (double t : {0.5, 5.0, 20.0})
        CHECK(std::abs(char_function_t(p, 1.3, t, 0.0, Direction::plus)) < 1.0 + 1e-6);

    // Long horizon converges to the stationary characteristic function.
    const cplx late = char_function_t(p, 1.3, 40.0, 0.0, Direction::plus);
    CHECK(std::abs(late - stationary_cf(p, 1.3)) < 1e-8);

    CHECK_THROWS_AS((void)char_function_t(p, 1.0, 1.0, -0.4, Direction::plus),
                    std::invalid_argument);
}
