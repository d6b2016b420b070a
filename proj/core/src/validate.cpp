#include "resetwalk/validate.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <stdexcept>

#include "resetwalk/analytic.hpp"
#include "resetwalk/inversion.hpp"
#include "resetwalk/model.hpp"
#include "resetwalk/optimize.hpp"
#include "resetwalk/simulate.hpp"

namespace resetwalk {

bool SuiteResult::passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.passed; });
}

const std::vector<std::string>& validation_suites() {
    static const std::vector<std::string> names = {
        "transforms", "closed-forms", "mc-vs-analytic", "inversion", "optimize"};
    return names;
}

namespace {

using cplx = std::complex<double>;

std::string format(const char* fmt, double a, double b) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), fmt, a, b);
    return buf;
}

struct Battery {
    std::vector<CheckResult> checks;

    void tolerance(const std::string& name, double err, double tol) {
        checks.push_back({name, err <= tol, format("max err %.3g (tol %.3g)", err, tol)});
    }
    void band(const std::string& name, double worst_sigmas, double band_sigmas) {
        checks.push_back({name, worst_sigmas <= band_sigmas,
                          format("worst |dev|/stderr %.2f (band %.0f)", worst_sigmas,
                                 band_sigmas)});
    }
    void require(const std::string& name, bool ok, std::string detail) {
        checks.push_back({name, ok, std::move(detail)});
    }
};

// Composite Simpson rule over [a, b] with an even number of subintervals.
template <typename F>
auto simpson(F f, double a, double b, int subintervals) -> decltype(f(a)) {
    const int n = subintervals + (subintervals % 2);
    const double h = (b - a) / n;
    auto acc = f(a) + f(b);
    for (int i = 1; i < n; ++i) acc += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return acc * (h / 3.0);
}

// Exact survival of the pure-drift walk (level ell, speed Gamma both ways),
// built from the delay-differential structure of its renewal equation: the
// Laplace transform has a single exponential delay exp(-s ell/Gamma), so the
// time-domain solution is a finite polynomial-in-(t - nT) series. This is an
// independent line against the numerical inverters.
double series_survival_minus(double t, double reset, double rho, double speed,
                             double level) {
    const double T = level / speed;
    const double c0 = reset * rho * std::exp(-reset * T);
    double sum = 0.0, coef = 1.0;
    for (int n = 0; n * T <= t; ++n) {
        sum += coef * std::pow(t - n * T, n);
        coef *= -c0 / (n + 1);
    }
    return sum;
}
double series_survival_plus(double t, double reset, double rho, double speed,
                            double level, double x) {
    const double ts = (level - x) / speed;
    double v = series_survival_minus(t, reset, rho, speed, level);
    if (t >= ts)
        v -= std::exp(-reset * ts) * series_survival_minus(t - ts, reset, rho, speed, level);
    return v;
}

// rho-weighted survival for a walker started at the origin with a freshly
// drawn direction -- the quantity the Monte Carlo survival estimator samples.
double survival_mixture(const ModelParams& p, double level, double t,
                        const InversionConfig& cfg = {}) {
    const double rho = p.direction_prob;
    double v = 0.0;
    if (rho > 0.0) v += rho * survival_general(p, level, 0.0, Direction::plus, t, cfg);
    if (rho < 1.0)
        v += (1.0 - rho) * survival_general(p, level, 0.0, Direction::minus, t, cfg);
    return v;
}

// ---------------------------------------------------------------------------
// transforms
// ---------------------------------------------------------------------------
SuiteResult suite_transforms() {
    Battery b;

    { // exponential law: Laplace and Fourier transforms vs direct quadrature
        const double gamma = 1.7;
        const JumpLaw law = JumpLaw::exponential(gamma);
        double worst = 0.0;
        for (double r : {0.3, 1.0, 2.5}) {
            const double quad = simpson(
                [&](double u) { return gamma * std::exp(-gamma * u) * std::exp(-r * u); },
                0.0, 60.0 / gamma, 20000);
            worst = std::max(worst, std::abs(law.laplace(r) - quad));
        }
        b.tolerance("exponential jump law: Laplace transform vs quadrature", worst, 1e-10);

        worst = 0.0;
        for (double omega : {0.7, 2.2})
            for (Direction dir : {Direction::plus, Direction::minus}) {
                const double sgn = dir == Direction::plus ? 1.0 : -1.0;
                const cplx quad = simpson(
                    [&](double u) {
                        return gamma * std::exp(-gamma * u) *
                               std::exp(cplx(0.0, sgn * omega * u));
                    },
                    0.0, 60.0 / gamma, 20000);
                worst = std::max(worst, std::abs(law.fourier(omega, dir) - quad));
            }
        b.tolerance("exponential jump law: Fourier factor vs quadrature", worst, 1e-10);
    }

    { // deterministic law: closed-form transforms
        const JumpLaw law = JumpLaw::deterministic(0.8);
        double worst = std::abs(law.laplace(1.3) - std::exp(-0.8 * 1.3));
        worst = std::max(worst, std::abs(law.fourier(2.1, Direction::plus) -
                                         std::exp(cplx(0.0, 0.8 * 2.1))));
        worst = std::max(worst, std::abs(law.mean() - 0.8));
        worst = std::max(worst, law.mass_at_zero());
        b.tolerance("deterministic jump law: closed-form transforms", worst, 1e-15);
    }

    ModelParams mixed;
    mixed.reset_rate = 0.8;
    mixed.direction_prob = 0.4;
    mixed.speed_plus = 1.0;
    mixed.speed_minus = 0.5;
    mixed.jump_rate_plus = 0.6;
    mixed.jump_law_plus = JumpLaw::exponential(1.5);
    mixed.jump_rate_minus = 0.3;
    mixed.jump_law_minus = JumpLaw::deterministic(0.7);

    { // total mass: the omega = 0 slice of the propagator is exactly 1/s
        double worst = 0.0;
        for (cplx s : {cplx(0.4, 0.0), cplx(1.1, 2.0), cplx(3.0, -1.2)})
            for (Direction dir : {Direction::plus, Direction::minus}) {
                const double x0 = dir == Direction::plus ? 0.4 : -0.4;
                worst = std::max(worst,
                                 std::abs(s * propagator_fl(mixed, 0.0, s, x0, dir) - 1.0));
            }
        b.tolerance("propagator normalization: s * phat(omega=0, s) = 1", worst, 1e-12);
    }

    { // rho = 1: the two-direction propagator collapses to the monotone
      // closed form (exp(i omega x0) + Lambda/s) / D_+(omega, s + Lambda)
        ModelParams mono;
        mono.reset_rate = 0.7;
        mono.direction_prob = 1.0;
        mono.speed_plus = 0.8;
        mono.jump_rate_plus = 1.3;
        mono.jump_law_plus = JumpLaw::exponential(2.0);
        std::minstd_rand gen(20260825);
        std::uniform_real_distribution<double> uw(-5.0, 5.0), ure(0.1, 3.0),
            uim(-3.0, 3.0), ux(0.0, 2.0);
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const double omega = uw(gen), x0 = ux(gen);
            const cplx s(ure(gen), uim(gen));
            const cplx denom = s + mono.reset_rate +
                               mono.jump_rate_plus *
                                   (1.0 - mono.jump_law_plus.fourier(omega, Direction::plus)) -
                               cplx(0.0, omega * mono.speed_plus);
            const cplx closed =
                (std::exp(cplx(0.0, omega * x0)) + mono.reset_rate / s) / denom;
            const cplx got = propagator_fl(mono, omega, s, x0, Direction::plus);
            worst = std::max(worst, std::abs(got - closed) / std::abs(closed));
        }
        b.tolerance("monotone (rho=1) reduction of the propagator", worst, 1e-12);
    }

    const ModelParams expdrift = exp_jump_params(1.0, 0.5, 1.0, 1.0, 1.0);

    { // s -> 0: s * phat converges to the stationary characteristic function
        const double s = 1e-8;
        double worst = 0.0;
        for (double omega : {0.5, 1.7}) {
            const cplx lim = stationary_cf(expdrift, omega);
            const cplx got =
                cplx(s, 0.0) * propagator_fl(expdrift, omega, cplx(s, 0.0), 0.0,
                                             Direction::plus);
            worst = std::max(worst, std::abs(got - lim));
        }
        b.tolerance("s * phat -> stationary characteristic function as s -> 0", worst,
                    1e-6);
    }

    { // unit mass of the stationary law, via its characteristic function
        double worst = std::abs(stationary_cf(expdrift, 0.0) - 1.0);
        worst = std::max(worst, std::abs(stationary_cf(mixed, 0.0) - 1.0));
        b.tolerance("stationary_cf(0) = 1", worst, 1e-14);
    }

    { // closed-form stationary density: atom + integrated wings = 1, and its
      // Fourier transform reproduces stationary_cf. The continuous part jumps
      // across x = 0, so each wing is integrated separately (with a 1e-12
      // inset so the x = 0 sample cannot pick up the other wing's limit).
        const double atom = stationary_density_exp_drift(1.0, 1.0, 1.0, 1.0, 0.5, 0.0)
                                .atom_weight;
        auto dens = [&](double x) {
            return stationary_density_exp_drift(1.0, 1.0, 1.0, 1.0, 0.5, x).density;
        };
        const double wings = simpson(dens, -50.0, -1e-12, 20000) +
                             simpson(dens, 1e-12, 50.0, 20000);
        b.tolerance("stationary density: atom + integrated wings = 1",
                    std::abs(atom + wings - 1.0), 1e-9);

        const double omega = 0.9;
        auto integrand = [&](double x) {
            return dens(x) * std::exp(cplx(0.0, omega * x));
        };
        const cplx wings_cf = simpson(integrand, -50.0, -1e-12, 20000) +
                              simpson(integrand, 1e-12, 50.0, 20000);
        b.tolerance("stationary density transform matches stationary_cf",
                    std::abs(atom + wings_cf - stationary_cf(expdrift, omega)), 1e-8);
    }

    return {"transforms", std::move(b.checks)};
}

// ---------------------------------------------------------------------------
// closed-forms
// ---------------------------------------------------------------------------
SuiteResult suite_closed_forms() {
    Battery b;
    const double level = 1.0;

    { // survival transforms at s = 0 are the MFPTs (pure drift)
        const double reset = 1.2, speed = 0.9, rho = 0.6;
        double worst = 0.0;
        const double tp = mfpt_pure_drift(0.3, Direction::plus, reset, speed, rho, level);
        const double tm = mfpt_pure_drift(-0.7, Direction::minus, reset, speed, rho, level);
        worst = std::max(worst,
                         std::abs(sp_laplace_pure_drift(0.0, 0.3, Direction::plus, reset,
                                                        speed, rho, level) -
                                  tp) /
                             tp);
        worst = std::max(worst,
                         std::abs(sp_laplace_pure_drift(0.0, -0.7, Direction::minus, reset,
                                                        speed, rho, level) -
                                  tm) /
                             tm);
        b.tolerance("pure drift: survival transform at s=0 equals the MFPT", worst, 1e-12);
    }

    { // survival transforms at s = 0 are the MFPTs (exponential jumps)
        const double reset = 0.8, rate = 1.1, gamma = 3.0, rho = 0.7;
        const MfptExpJumps t = mfpt_exp_jumps(reset, rate, gamma, rho, level);
        double worst = std::abs(sp_laplace_exp_jumps(0.0, 0.0, Direction::plus, reset, rate,
                                                     gamma, rho, level) -
                                t.plus) /
                       t.plus;
        worst = std::max(worst, std::abs(sp_laplace_exp_jumps(0.0, -0.4, Direction::minus,
                                                              reset, rate, gamma, rho,
                                                              level) -
                                         t.minus) /
                                    t.minus);
        b.tolerance("exponential jumps: survival transform at s=0 equals the MFPT", worst,
                    1e-12);
    }

    { // direction mixing: unconditional = rho * plus + (1 - rho) * minus
        const double rho = 0.35;
        double worst =
            std::abs(mfpt_pure_drift_unconditional(1.0, 1.0, rho, level) -
                     (rho * mfpt_pure_drift(0.0, Direction::plus, 1.0, 1.0, rho, level) +
                      (1.0 - rho) *
                          mfpt_pure_drift(0.0, Direction::minus, 1.0, 1.0, rho, level)));
        const MfptExpJumps t = mfpt_exp_jumps(1.0, 1.0, 4.0, rho, level);
        worst = std::max(worst, std::abs(t.unconditional -
                                         (rho * t.plus + (1.0 - rho) * t.minus)));
        b.tolerance("direction mixing of the unconditional MFPT", worst, 1e-13);
    }

    { // frozen reference values of both MFPT families
        // pure drift, Lambda=Gamma=level=1, rho=1/2: (1/Lambda)(e/rho - 1) = 2e - 1
        double worst = std::abs(mfpt_pure_drift_unconditional(1.0, 1.0, 0.5, 1.0) -
                                4.43656365691809047);
        // exponential jumps, Lambda=lambda=1, gamma=4, rho=1/2: 4 e^2 - 1
        worst = std::max(worst, std::abs(mfpt_exp_jumps(1.0, 1.0, 4.0, 0.5, 1.0)
                                             .unconditional -
                                         28.556224395722601));
        b.tolerance("frozen MFPT reference values", worst, 1e-12);
    }

    { // small-s continuity of the transforms near their s = 0 limit
        const double s = 1e-6;
        const double t1 = mfpt_pure_drift_unconditional(1.0, 1.0, 0.5, level);
        const double q1 =
            0.5 * sp_laplace_pure_drift(s, 0.0, Direction::plus, 1.0, 1.0, 0.5, level) +
            0.5 * sp_laplace_pure_drift(s, 0.0, Direction::minus, 1.0, 1.0, 0.5, level);
        double worst = std::abs(q1 - t1) / t1;
        const double t2 = mfpt_exp_jumps(1.0, 1.0, 4.0, 0.5, level).unconditional;
        const double q2 =
            0.5 * sp_laplace_exp_jumps(s, 0.0, Direction::plus, 1.0, 1.0, 4.0, 0.5, level) +
            0.5 * sp_laplace_exp_jumps(s, 0.0, Direction::minus, 1.0, 1.0, 4.0, 0.5, level);
        worst = std::max(worst, std::abs(q2 - t2) / t2);
        b.tolerance("small-s continuity of the survival transforms", worst, 1e-3);
    }

    { // Poissonian resetting cannot beat resetting deterministically after the
      // ballistic transit time: min over Lambda of T >= level/(speed*rho)
        bool ok = true;
        double worst_margin = 1e300;
        for (double rho : {0.25, 0.5, 0.75, 1.0}) {
            double best = 1e300;
            for (int i = 0; i <= 60; ++i) {
                const double lam = std::exp(std::log(0.01) + i * (std::log(10.0) -
                                                                  std::log(0.01)) /
                                                                 60.0);
                best = std::min(best,
                                mfpt_pure_drift_unconditional(lam, 1.0, rho, level));
            }
            const double bench = mfpt_rational(level, 1.0, rho);
            worst_margin = std::min(worst_margin, best / bench);
            ok = ok && best >= bench * (1.0 - 1e-12);
        }
        b.require("deterministic-restart benchmark is a lower bound", ok,
                  format("min ratio T*/benchmark %.4f (must be >= %.0f)", worst_margin,
                         1.0));
    }

    { // raising rho (more favorable redraws) shortens the MFPT
        bool ok = true;
        double prev = 1e300;
        for (double rho : {0.3, 0.6, 0.9}) {
            const double t = mfpt_pure_drift_unconditional(1.0, 1.0, rho, level);
            ok = ok && t < prev;
            prev = t;
        }
        prev = 1e300;
        for (double rho : {0.3, 0.6, 0.9}) {
            const double t = mfpt_exp_jumps(1.0, 1.0, 4.0, rho, level).unconditional;
            ok = ok && t < prev;
            prev = t;
        }
        b.require("MFPT decreases with the favorable-direction probability", ok,
                  ok ? "monotone on rho in {0.3, 0.6, 0.9}" : "monotonicity violated");
    }

    return {"closed-forms", std::move(b.checks)};
}

// ---------------------------------------------------------------------------
// mc-vs-analytic
// ---------------------------------------------------------------------------
SuiteResult suite_mc(std::uint64_t n_paths) {
    Battery b;
    const std::uint64_t n = n_paths ? n_paths : 1000000;
    const double band = n < 100000 ? 5.0 : 4.0; // documented fast mode below 1e5
    const double level = 1.0;

    struct MfptCase {
        const char* name;
        ModelParams model;
        double analytic;
    };
    const MfptCase cases[] = {
        {"MFPT vs closed form (pure drift, Lambda=1, rho=0.5)",
         pure_drift_params(1.0, 0.5, 1.0),
         mfpt_pure_drift_unconditional(1.0, 1.0, 0.5, level)},
        {"MFPT vs closed form (pure drift, Lambda=2, rho=0.75)",
         pure_drift_params(2.0, 0.75, 1.0),
         mfpt_pure_drift_unconditional(2.0, 1.0, 0.75, level)},
        {"MFPT vs closed form (exp jumps, Lambda=1, rho=0.5, gamma=4)",
         exp_jump_params(1.0, 0.5, 1.0, 4.0, 1.0),
         mfpt_exp_jumps(1.0, 1.0, 4.0, 0.5, level).unconditional},
        {"MFPT vs closed form (exp jumps, Lambda=0.5, rho=0.9, gamma=4)",
         exp_jump_params(0.5, 0.9, 1.0, 4.0, 1.0),
         mfpt_exp_jumps(0.5, 1.0, 4.0, 0.9, level).unconditional},
    };
    std::uint64_t seed = 377001;
    for (const auto& c : cases) {
        const EstimateWithError est =
            estimate_mfpt(c.model, level, n, default_censor_cap(c.analytic), seed++);
        if (est.censored > 0) {
            b.require(c.name, false,
                      format("%.0f censored paths (cap 50x analytic)",
                             double(est.censored), 0.0));
            continue;
        }
        b.band(c.name, std::abs(est.mean - c.analytic) / est.std_error, band);
    }

    { // stationary law: atom at the origin and L1 of the continuous part
        const ModelParams p = exp_jump_params(1.0, 0.5, 1.0, 1.0, 1.0);
        const StationaryHistogram h = estimate_stationary(p, n, 20.0, 821101);
        const double atom = 0.25; // Lambda*rho/(Lambda+lambda)
        b.band("stationary law: atom at the origin",
               std::abs(h.atom.mean - atom) / h.atom.std_error, band);

        const double width = (h.spec.hi - h.spec.lo) / double(h.spec.bins);
        double l1 = 0.0;
        for (std::size_t i = 0; i < h.spec.bins; ++i) {
            const double x = h.spec.lo + (i + 0.5) * width;
            const double dens =
                stationary_density_exp_drift(1.0, 1.0, 1.0, 1.0, 0.5, x).density;
            l1 += std::abs(h.density[i] - dens) * width;
        }
        // 0.02 at the 1e6 default; the statistical L1 shrinks as 1/sqrt(n)
        const double thr = 0.02 * std::sqrt(1e6 / double(n));
        b.tolerance("stationary law: L1 distance of the continuous part", l1, thr);
    }

    { // survival curve vs the exact delay-series solution (pure drift). The
      // closed series is exact, so the band is purely statistical at any n.
        const ModelParams pd = pure_drift_params(1.0, 0.5, 1.0);
        const std::vector<double> grid_pd = {0.4, 1.4, 2.4, 3.6, 5.2, 8.4};
        const auto est = estimate_survival(pd, level, grid_pd, n, 821201);
        double worst = 0.0;
        for (std::size_t j = 0; j < grid_pd.size(); ++j) {
            const double t = grid_pd[j];
            const double a = 0.5 * series_survival_plus(t, 1.0, 0.5, 1.0, level, 0.0) +
                             0.5 * series_survival_minus(t, 1.0, 0.5, 1.0, level);
            worst = std::max(worst, std::abs(est[j].mean - a) /
                                        std::max(est[j].std_error, 1e-12));
        }
        b.band("survival curve vs exact series (pure drift)", worst, band);
    }

    { // survival curve vs the doubly inverted transform (exp jumps). The
      // reference itself carries ~2e-4 absolute inversion error, so the band
      // allows that on top of the statistical part (binding at n >~ 1e6).
        const ModelParams ej = exp_jump_params(1.0, 0.5, 1.0, 4.0, 1.0);
        const std::vector<double> grid_ej = {0.5, 2.0, 5.0, 10.0, 20.0, 35.0};
        const auto est2 = estimate_survival(ej, level, grid_ej, n, 821301);
        const double eps_inverter = 5e-4;
        double worst = 0.0;
        for (std::size_t j = 0; j < grid_ej.size(); ++j) {
            const double a = survival_mixture(ej, level, grid_ej[j]);
            worst = std::max(worst, (std::abs(est2[j].mean - a) - eps_inverter) /
                                        std::max(est2[j].std_error, 1e-12));
        }
        b.band("survival curve vs inverted transform (exp jumps)", worst, band);
    }

    { // empirical characteristic function at a stationary-age snapshot
        const ModelParams p = exp_jump_params(1.0, 0.5, 1.0, 1.0, 1.0);
        const double omega = 1.3;
        const std::uint64_t n_cf = std::max<std::uint64_t>(n / 10, 1000);
        const CharFunctionEstimate est = estimate_char_function(p, omega, 20.0, n_cf,
                                                                821401);
        const cplx target = stationary_cf(p, omega);
        const double worst =
            std::max(std::abs(est.mean.real() - target.real()) / est.std_error_re,
                     std::abs(est.mean.imag() - target.imag()) / est.std_error_im);
        b.band("empirical characteristic function vs stationary_cf", worst, band);
    }

    return {"mc-vs-analytic", std::move(b.checks)};
}

// ---------------------------------------------------------------------------
// inversion
// ---------------------------------------------------------------------------
SuiteResult suite_inversion() {
    Battery b;
    const double level = 1.0;

    struct Pair {
        const char* name;
        std::function<cplx(cplx)> fhat;
        std::function<double(double)> f;
    };
    const Pair pairs[] = {
        {"1/r -> 1", [](cplx r) { return 1.0 / r; }, [](double) { return 1.0; }},
        {"1/(r+1) -> exp(-t)", [](cplx r) { return 1.0 / (r + 1.0); },
         [](double t) { return std::exp(-t); }},
        {"1/r^2 -> t", [](cplx r) { return 1.0 / (r * r); }, [](double t) { return t; }},
        {"1/(r+1/2) -> exp(-t/2)", [](cplx r) { return 1.0 / (r + 0.5); },
         [](double t) { return std::exp(-0.5 * t); }},
        {"1/(r(r+2)) -> (1-exp(-2t))/2", [](cplx r) { return 1.0 / (r * (r + 2.0)); },
         [](double t) { return (1.0 - std::exp(-2.0 * t)) / 2.0; }},
    };
    const double times[] = {0.1, 1.0, 10.0};

    { // Talbot contour, in relative terms. 24 nodes, not more: the contour's
      // roundoff amplification grows like exp(2M/5), and the t=10 tail of the
      // decaying pairs (e^-10 ~ 5e-5) sits right at the M=32 floor.
        double worst = 0.0;
        for (const Pair& p : pairs)
            for (double t : times) {
                const double got = laplace_invert(p.fhat, t, InversionConfig::talbot(24));
                worst = std::max(worst, std::abs(got - p.f(t)) /
                                            std::max(std::abs(p.f(t)), 1e-12));
            }
        b.tolerance("five known transform pairs (fixed Talbot)", worst, 1e-7);
    }

    { // Gaver-Stehfest: real-axis abscissas; error measured against the scale
      // max(1, |f(t)|) because decayed tails fall below its cancellation floor
        double worst = 0.0;
        for (const Pair& p : pairs)
            for (double t : times) {
                const double got = laplace_invert(p.fhat, t, InversionConfig::gaver(14));
                worst = std::max(worst,
                                 std::abs(got - p.f(t)) / std::max(std::abs(p.f(t)), 1.0));
            }
        b.tolerance("five known transform pairs (Gaver-Stehfest, scale-relative)", worst,
                    1e-4);
    }

    { // the two back-ends agree on the first-passage kernel G_0(z)
        struct KernelCase {
            const char* name;
            ModelParams model;
            double tol;
        };
        ModelParams det_drift = pure_drift_params(0.5, 0.5, 1.0);
        det_drift.jump_rate_plus = 0.1;
        det_drift.jump_law_plus = JumpLaw::deterministic(5.0);
        const KernelCase kcases[] = {
            {"kernel back-end agreement (pure drift)", pure_drift_params(0.5, 0.5, 1.0),
             1e-5},
            {"kernel back-end agreement (exponential jumps)",
             exp_jump_params(0.5, 0.5, 0.5, 2.0, 1.0), 1e-5},
            // a deterministic jump size strings lag poles along the contour
            // axis: Talbot degrades from geometric to algebraic convergence
            // there, so this shared band is intentionally wider
            {"kernel back-end agreement (deterministic jumps + drift)", det_drift, 1e-3},
        };
        for (const auto& kc : kcases) {
            double worst = 0.0;
            for (int i = 1; i <= 32; ++i) {
                const double z = 2.0 * level * i / 32.0;
                const double g =
                    first_passage_kernel(kc.model, z, 0.0, InversionConfig::gaver(14));
                const double tb =
                    first_passage_kernel(kc.model, z, 0.0, InversionConfig::talbot(32));
                worst = std::max(worst, std::abs(g - tb) / std::max(std::abs(tb), 1e-300));
            }
            b.tolerance(kc.name, worst, kc.tol);
        }
    }

    { // kernel-route MFPT vs both closed-form families
        const InversionConfig cfg = InversionConfig::talbot(32);
        double worst = 0.0;
        for (int i = 0; i < 10; ++i) {
            const double rho = 0.15 + 0.08 * i, lam = 0.3 + 0.3 * i;
            const ModelParams p = pure_drift_params(lam, rho, 1.0);
            const double tp = mfpt_pure_drift(0.2, Direction::plus, lam, 1.0, rho, level);
            const double tm =
                mfpt_pure_drift(-0.3, Direction::minus, lam, 1.0, rho, level);
            worst = std::max(worst,
                             std::abs(mfpt_general(p, level, 0.2, Direction::plus, cfg) -
                                      tp) /
                                 tp);
            worst = std::max(worst,
                             std::abs(mfpt_general(p, level, -0.3, Direction::minus, cfg) -
                                      tm) /
                                 tm);
        }
        b.tolerance("kernel-route MFPT matches the pure-drift closed form", worst, 1e-6);

        worst = 0.0;
        for (int i = 0; i < 10; ++i) {
            const double rho = 0.15 + 0.08 * i, lam = 0.3 + 0.3 * i;
            const ModelParams p = exp_jump_params(lam, rho, 1.0, 4.0, 1.0);
            const double tp =
                sp_laplace_exp_jumps(0.0, 0.3, Direction::plus, lam, 1.0, 4.0, rho, level);
            const MfptExpJumps t = mfpt_exp_jumps(lam, 1.0, 4.0, rho, level);
            worst = std::max(worst,
                             std::abs(mfpt_general(p, level, 0.3, Direction::plus, cfg) -
                                      tp) /
                                 tp);
            worst =
                std::max(worst,
                         std::abs(mfpt_general(p, level, -0.5, Direction::minus, cfg) -
                                  t.minus) /
                             t.minus);
        }
        b.tolerance("kernel-route MFPT matches the exponential-jump closed form", worst,
                    1e-6);
    }

    { // survival at t -> 0+ recovers probability 1
        const ModelParams ej = exp_jump_params(1.0, 0.5, 1.0, 4.0, 1.0);
        double worst =
            std::abs(survival_general(ej, level, 0.0, Direction::plus, 1e-6) - 1.0);
        worst = std::max(worst, std::abs(survival_general(ej, level, 0.0,
                                                          Direction::minus, 1e-6) -
                                         1.0));
        const ModelParams pd = pure_drift_params(1.0, 0.5, 1.0);
        worst = std::max(worst, std::abs(survival_general(pd, level, 0.0,
                                                          Direction::plus, 1e-6) -
                                         1.0));
        b.tolerance("survival probability -> 1 as t -> 0", worst, 1e-3);
    }

    { // double-inversion survival vs the exact delay-series solution,
      // sampled away from the ballistic kinks at integer multiples of l/Gamma
        const ModelParams pd = pure_drift_params(1.0, 0.5, 1.0);
        double worst = 0.0;
        for (double t : {0.4, 1.4, 2.4, 3.6, 5.2, 8.4}) {
            worst = std::max(worst,
                             std::abs(survival_general(pd, level, 0.0, Direction::plus, t) -
                                      series_survival_plus(t, 1.0, 0.5, 1.0, level, 0.0)));
            worst = std::max(worst,
                             std::abs(survival_general(pd, level, 0.0, Direction::minus,
                                                       t) -
                                      series_survival_minus(t, 1.0, 0.5, 1.0, level)));
        }
        b.tolerance("pure-drift survival matches the exact delay-series solution", worst,
                    5e-3);
    }

    { // integral of the survival curve reproduces the MFPT (both families).
      // Pure drift: split the quadrature at the ballistic kink t = level/speed.
      // Exponential jumps: order-12 outer inversion -- the far tail of the
      // curve is an absolute noise floor set by the outer Stehfest weights
      // amplifying inner-kernel noise, and clamping that noise to [0,1]
      // biases the integral; order 12's smaller weights cut the floor ~13x.
        const ModelParams pd = pure_drift_params(1.0, 0.5, 1.0);
        const double t_pd = mfpt_pure_drift_unconditional(1.0, 1.0, 0.5, level);
        auto surv_pd = [&](double t) {
            return survival_mixture(pd, level, t, InversionConfig::gaver(14));
        };
        const double quad_pd = simpson(surv_pd, 0.0, 1.0, 400) +
                               simpson(surv_pd, 1.0, 50.0 * t_pd, 4000);
        double worst = std::abs(quad_pd - t_pd) / t_pd;

        const ModelParams ej = exp_jump_params(1.0, 0.5, 1.0, 4.0, 1.0);
        const double t_ej = mfpt_exp_jumps(1.0, 1.0, 4.0, 0.5, level).unconditional;
        auto surv_ej = [&](double t) {
            return survival_mixture(ej, level, t, InversionConfig::gaver(12));
        };
        const double quad_ej = simpson(surv_ej, 0.0, 50.0 * t_ej, 4000);
        worst = std::max(worst, std::abs(quad_ej - t_ej) / t_ej);
        b.tolerance("survival curve integrates to the MFPT", worst, 1e-3);
    }

    return {"inversion", std::move(b.checks)};
}

// ---------------------------------------------------------------------------
// optimize
// ---------------------------------------------------------------------------
SuiteResult suite_optimize() {
    Battery b;
    const double level = 1.0;

    { // xi_root: residual of exp(xi)(xi-1) + rho on 100 rho values + endpoints
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const double rho = i / 99.0;
            const double xi = xi_root(rho);
            worst = std::max(worst, std::abs(std::exp(xi) * (xi - 1.0) + rho));
        }
        worst = std::max(worst, std::abs(xi_root(0.0) - 1.0));
        worst = std::max(worst, std::abs(xi_root(1.0)));
        b.tolerance("xi_root residual on 100 rho values", worst, 1e-12);
        b.tolerance("xi_root(1/2) frozen reference",
                    std::abs(xi_root(0.5) - 0.768039047013466), 1e-12);
    }

    const InversionConfig cfg = InversionConfig::talbot(32);

    { // closed-form optimum vs golden-section over the kernel-route MFPT
        const OptimumReport closed = optimal_rate_pure_drift(1.0, level, 0.5);
        const OptimumReport numeric = minimize_mfpt_numeric(
            pure_drift_params(1.0, 0.5, 1.0), level, 1e-3, 1e3, 1e-6, cfg);
        const bool shapes = closed.regime == OptimumRegime::interior_minimum &&
                            numeric.regime == OptimumRegime::interior_minimum;
        const double err =
            shapes ? std::abs(*numeric.lambda_star - *closed.lambda_star) /
                         *closed.lambda_star
                   : 1e300;
        b.tolerance("pure drift: optimal rate, closed form vs numeric minimizer", err,
                    1e-4);
    }
    {
        double worst = 0.0;
        for (double rho : {0.5, 0.9}) {
            const OptimumReport closed = optimal_rate_exp_jumps(1.0, 4.0, level, rho);
            const OptimumReport numeric = minimize_mfpt_numeric(
                exp_jump_params(1.0, rho, 1.0, 4.0, 1.0), level, 1e-3, 1e3, 1e-6, cfg);
            if (closed.regime != OptimumRegime::interior_minimum ||
                numeric.regime != OptimumRegime::interior_minimum) {
                worst = 1e300;
                break;
            }
            worst = std::max(worst, std::abs(*numeric.lambda_star - *closed.lambda_star) /
                                        *closed.lambda_star);
        }
        b.tolerance("exp jumps (gamma*level=4): optimal rate, closed form vs numeric",
                    worst, 1e-4);
    }

    { // regime flip of the gamma*level = 1/2 family near rho = 0.8244
        const OptimumReport lo = optimal_rate_exp_jumps(1.0, 0.5, level, 0.824);
        const OptimumReport hi = optimal_rate_exp_jumps(1.0, 0.5, level, 0.825);
        const bool ok = lo.regime == OptimumRegime::monotone_decreasing &&
                        hi.regime == OptimumRegime::interior_minimum;
        b.require("regime flip bracketed in rho (0.824, 0.825) at gamma*level=1/2", ok,
                  ok ? "monotone below, interior minimum above"
                     : "unexpected regime classification");
    }

    { // printed small-/large-rho approximations track the exact optimum
        double worst = 0.0;
        {
            const double rho = 0.05;
            const ApproxOptimum a =
                approx_optimal_pure_drift(RhoRegime::small_rho, 1.0, level, rho);
            const OptimumReport e = optimal_rate_pure_drift(1.0, level, rho);
            worst = std::max(worst, std::abs(a.lambda_star - *e.lambda_star) /
                                        *e.lambda_star);
            worst = std::max(worst, std::abs(a.mfpt_star - e.mfpt_star) / e.mfpt_star);
        }
        {
            const double rho = 0.95;
            const ApproxOptimum a =
                approx_optimal_pure_drift(RhoRegime::large_rho, 1.0, level, rho);
            const OptimumReport e = optimal_rate_pure_drift(1.0, level, rho);
            worst = std::max(worst, std::abs(a.lambda_star - *e.lambda_star) /
                                        *e.lambda_star);
            worst = std::max(worst, std::abs(a.mfpt_star - e.mfpt_star) / e.mfpt_star);
        }
        b.tolerance("asymptotic approximations of the pure-drift optimum", worst, 0.15);
    }

    { // the numeric minimizer's MFPT value matches the closed form too
        const OptimumReport closed = optimal_rate_exp_jumps(1.0, 4.0, level, 0.5);
        const OptimumReport numeric = minimize_mfpt_numeric(
            exp_jump_params(1.0, 0.5, 1.0, 4.0, 1.0), level, 1e-3, 1e3, 1e-6, cfg);
        b.tolerance("minimal MFPT value, closed form vs numeric",
                    std::abs(numeric.mfpt_star - closed.mfpt_star) / closed.mfpt_star,
                    1e-6);
    }

    return {"optimize", std::move(b.checks)};
}

} // namespace

SuiteResult run_suite(const std::string& suite, std::uint64_t n_paths) {
    if (suite == "transforms") return suite_transforms();
    if (suite == "closed-forms") return suite_closed_forms();
    if (suite == "mc-vs-analytic") return suite_mc(n_paths);
    if (suite == "inversion") return suite_inversion();
    if (suite == "optimize") return suite_optimize();
    throw std::invalid_argument("unknown validation suite '" + suite +
                                "' (expected transforms, closed-forms, mc-vs-analytic, "
                                "inversion, or optimize)");
}

} // namespace resetwalk
