#include "resetwalk/inversion.hpp"

#include <atomic>
#include <cmath>
#include <iostream>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "resetwalk/analytic.hpp"

namespace resetwalk {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_time(double t) {
    if (!(t > 0.0)) throw std::invalid_argument("laplace_invert: t must be > 0");
}

// --- Gaver-Stehfest ---------------------------------------------------------

// Salzer weights V_k, k = 1..n (n even). Factorials up to (2*(n/2))! = 20!
// stay within double range for n <= 20; beyond that the alternating sum is
// useless in double precision anyway, so larger orders are rejected.
std::vector<double> stehfest_weights(int n) {
    if (n < 4 || n > 20 || n % 2 != 0)
        throw std::invalid_argument(
            "gaver_stehfest order must be even and within [4,20]; larger orders "
            "overflow the binomial weights in double precision");
    const int m = n / 2;
    std::vector<double> fact(2 * m + 1, 1.0);
    for (int i = 1; i <= 2 * m; ++i) fact[i] = fact[i - 1] * i;
    std::vector<double> v(n + 1, 0.0);
    for (int k = 1; k <= n; ++k) {
        double sum = 0.0;
        for (int j = (k + 1) / 2; j <= std::min(k, m); ++j) {
            double term = std::pow(static_cast<double>(j), m) * fact[2 * j];
            term /= fact[m - j] * fact[j] * fact[j - 1] * fact[k - j] * fact[2 * j - k];
            sum += term;
        }
        v[k] = ((m + k) % 2 == 0 ? 1.0 : -1.0) * sum;
    }
    return v;
}

template <class F> // F: double -> double
double gaver_stehfest(const F& fhat, double t, int order) {
    const std::vector<double> v = stehfest_weights(order);
    const double log2_over_t = std::numbers::ln2 / t;
    double acc = 0.0;
    for (int k = 1; k <= order; ++k) acc += v[k] * fhat(k * log2_over_t);
    return acc * log2_over_t;
}

template <class F> // F: double -> complex
std::complex<double> gaver_stehfest_c(const F& fhat, double t, int order) {
    const std::vector<double> v = stehfest_weights(order);
    const double log2_over_t = std::numbers::ln2 / t;
    std::complex<double> acc = 0.0;
    for (int k = 1; k <= order; ++k) acc += v[k] * fhat(k * log2_over_t);
    return acc * log2_over_t;
}

// --- fixed Talbot ------------------------------------------------------------

// Contour s(theta) = r*theta*(cot(theta) + i), theta in (-pi, pi), with the
// fixed radius r = 2M/(5t). sigma is the angular derivative factor:
// s'(theta) = i*r*(1 + i*sigma(theta)).
double talbot_sigma(double theta) {
    const double c = std::cos(theta) / std::sin(theta);
    return theta + (theta * c - 1.0) * c;
}

// Real original: conjugate-symmetric half contour.
template <class F> // F: complex -> complex
double talbot_real(const F& fhat, double t, int nodes) {
    if (nodes < 4) throw std::invalid_argument("fixed_talbot: need at least 4 nodes");
    const double r = 2.0 * nodes / (5.0 * t);
    double acc = 0.5 * std::exp(r * t) * fhat(std::complex<double>(r, 0.0)).real();
    for (int k = 1; k < nodes; ++k) {
        const double theta = k * std::numbers::pi / nodes;
        const double cot = std::cos(theta) / std::sin(theta);
        const std::complex<double> s(r * theta * cot, r * theta);
        const std::complex<double> amp(1.0, talbot_sigma(theta));
        acc += (std::exp(s * t) * fhat(s) * amp).real();
    }
    return acc * r / nodes;
}

// Complex original: walk both contour halves.
template <class F>
std::complex<double> talbot_complex(const F& fhat, double t, int nodes) {
    if (nodes < 4) throw std::invalid_argument("fixed_talbot: need at least 4 nodes");
    const double r = 2.0 * nodes / (5.0 * t);
    std::complex<double> acc = std::exp(r * t) * fhat(std::complex<double>(r, 0.0));
    for (int k = 1; k < nodes; ++k) {
        const double theta = k * std::numbers::pi / nodes;
        const double cot = std::cos(theta) / std::sin(theta);
        const std::complex<double> amp(1.0, talbot_sigma(theta));
        const std::complex<double> s_up(r * theta * cot, r * theta);
        acc += std::exp(s_up * t) * fhat(s_up) * amp;
        const std::complex<double> s_dn = std::conj(s_up);
        acc += std::exp(s_dn * t) * fhat(s_dn) * std::conj(amp);
    }
    return acc * (r / (2.0 * nodes));
}

} // namespace

double laplace_invert(const std::function<double(double)>& fhat, double t,
                      const InversionConfig& cfg) {
    check_time(t);
    if (cfg.method == InversionConfig::Method::fixed_talbot)
        throw std::invalid_argument(
            "laplace_invert: fixed_talbot needs a transform callable at complex s");
    return gaver_stehfest(fhat, t, cfg.gs_order);
}

double laplace_invert(const std::function<std::complex<double>(std::complex<double>)>& fhat,
                      double t, const InversionConfig& cfg) {
    check_time(t);
    if (cfg.method == InversionConfig::Method::gaver_stehfest) {
        return gaver_stehfest(
            [&](double s) { return fhat(std::complex<double>(s, 0.0)).real(); }, t,
            cfg.gs_order);
    }
    return talbot_real(fhat, t, cfg.talbot_nodes);
}

std::complex<double>
laplace_invert_complex(const std::function<std::complex<double>(std::complex<double>)>& fhat,
                       double t, const InversionConfig& cfg) {
    check_time(t);
    if (cfg.method == InversionConfig::Method::gaver_stehfest) {
        return gaver_stehfest_c(
            [&](double s) { return fhat(std::complex<double>(s, 0.0)); }, t, cfg.gs_order);
    }
    return talbot_complex(fhat, t, cfg.talbot_nodes);
}

// ---------------------------------------------------------------------------
// First-passage machinery
// ---------------------------------------------------------------------------

namespace {

// Rightward-channel symbol phi(r) = lambda_+ (1 - hhat_+(r)) + Gamma_+ r.
double channel_symbol(const ModelParams& p, double r) {
    return p.jump_rate_plus * (1.0 - p.jump_law_plus.laplace(r)) + p.speed_plus * r;
}
std::complex<double> channel_symbol(const ModelParams& p, std::complex<double> r) {
    return p.jump_rate_plus * (1.0 - p.jump_law_plus.laplace(r)) + p.speed_plus * r;
}

// G_s(z): kernel at z > 0 (z = 0 handled by the initial-value theorem).
double kernel_g(const ModelParams& p, double z, double s, const InversionConfig& cfg) {
    if (z == 0.0) {
        if (p.speed_plus > 0.0) return 0.0;
        return 1.0 / (s + p.reset_rate + p.jump_rate_plus);
    }
    if (cfg.method == InversionConfig::Method::fixed_talbot) {
        return talbot_real(
            [&](std::complex<double> r) {
                return 1.0 / (r * (s + p.reset_rate + channel_symbol(p, r)));
            },
            z, cfg.talbot_nodes);
    }
    return gaver_stehfest(
        [&](double r) { return 1.0 / (r * (s + p.reset_rate + channel_symbol(p, r))); }, z,
        cfg.gs_order);
}

// W_s(z) = 1 - (s + Lambda) G_s(z), inverted directly from
// phi(r) / (r * (s + Lambda + phi(r))) to avoid the catastrophic cancellation
// of forming 1 - (s+Lambda)*G when Lambda*G_s(z) is close to 1 (large
// reset rates or deep levels).
double kernel_w(const ModelParams& p, double z, double s, const InversionConfig& cfg) {
    if (z == 0.0) {
        if (p.speed_plus > 0.0) return 1.0;
        return p.jump_rate_plus / (s + p.reset_rate + p.jump_rate_plus);
    }
    if (cfg.method == InversionConfig::Method::fixed_talbot) {
        return talbot_real(
            [&](std::complex<double> r) {
                const std::complex<double> phi = channel_symbol(p, r);
                return phi / (r * (s + p.reset_rate + phi));
            },
            z, cfg.talbot_nodes);
    }
    return gaver_stehfest(
        [&](double r) {
            const double phi = channel_symbol(p, r);
            return phi / (r * (s + p.reset_rate + phi));
        },
        z, cfg.gs_order);
}

void check_passage_domain(const ModelParams& p, double level, double x, Direction dir) {
    validate_params(p);
    if (!(level > 0.0)) throw std::invalid_argument("first passage: level must be > 0");
    if (dir == Direction::plus) {
        if (x < 0.0 || x > level)
            throw std::invalid_argument("first passage: Plus start needs 0 <= x <= level");
    } else if (x > 0.0) {
        throw std::invalid_argument("first passage: Minus start needs x <= 0");
    }
}

std::atomic<int> survival_clamp_warnings{0};

} // namespace

double first_passage_kernel(const ModelParams& p, double z, double s,
                            const InversionConfig& cfg) {
    validate_params(p);
    if (!(z >= 0.0)) throw std::invalid_argument("first_passage_kernel: z must be >= 0");
    if (!(s >= 0.0)) throw std::invalid_argument("first_passage_kernel: s must be >= 0");
    return kernel_g(p, z, s, cfg);
}

double mfpt_general(const ModelParams& p, double level, double x, Direction dir,
                    const InversionConfig& cfg) {
    check_passage_domain(p, level, x, dir);
    const double rho = p.direction_prob;
    if (rho == 0.0) return kInf;
    if (p.reset_rate == 0.0) {
        // No resets: a Plus walker crosses by transport alone, a Minus walker
        // never turns around.
        if (dir == Direction::minus) return kInf;
        return kernel_g(p, level - x, 0.0, cfg);
    }
    const double w = kernel_w(p, level, 0.0, cfg);
    if (!(w > 0.0))
        throw std::runtime_error(
            "mfpt_general: renewal denominator 1 - Lambda*G_0(level) is not positive "
            "(kernel inversion breakdown)");
    if (dir == Direction::minus) return 1.0 / (p.reset_rate * rho * w);
    return kernel_g(p, level - x, 0.0, cfg) / (rho * w);
}

double mfpt_general_unconditional(const ModelParams& p, double level,
                                  const InversionConfig& cfg) {
    check_passage_domain(p, level, 0.0, Direction::plus);
    const double rho = p.direction_prob;
    if (rho == 0.0) return kInf;
    if (rho == 1.0) return mfpt_general(p, level, 0.0, Direction::plus, cfg);
    const double t_plus = mfpt_general(p, level, 0.0, Direction::plus, cfg);
    const double t_minus = mfpt_general(p, level, 0.0, Direction::minus, cfg);
    return rho * t_plus + (1.0 - rho) * t_minus;
}

double survival_general(const ModelParams& p, double level, double x, Direction dir,
                        double t, const InversionConfig& cfg) {
    check_passage_domain(p, level, x, dir);
    if (t == 0.0) return 1.0; // the start is strictly below the level
    check_time(t);
    const double rho = p.direction_prob;
    const double reset = p.reset_rate;

    // Inner kernel inversions run on the Talbot contour in z, whatever
    // cfg.method says: the outer Stehfest sum amplifies transform noise by
    // roughly the magnitude of its alternating weights (1e3-1e4 at order 14),
    // so a Stehfest inner pass (~1e-5 relative) would contaminate the curve
    // at the percent level, while Talbot's ~1e-9 keeps the amplified noise
    // below the outer discretization error. cfg.talbot_nodes sets the cost.
    //
    // Exception: a deterministic jump law puts the delay factor exp(-a*r)
    // into the kernel transform itself; its lag poles form strings that
    // escape the fixed Talbot contour (error decays only algebraically in
    // the node count), so those kernels fall back to Stehfest.
    InversionConfig inner = cfg;
    const bool delay_law = p.jump_rate_plus > 0.0 &&
                           p.jump_law_plus.kind() == JumpLaw::Kind::deterministic &&
                           p.jump_law_plus.parameter() > 0.0;
    inner.method = delay_law ? InversionConfig::Method::gaver_stehfest
                             : InversionConfig::Method::fixed_talbot;

    // Survival transform at real s > 0 assembled from the two kernels:
    //   A(s)      = (s + Lambda) / (s + Lambda*rho*W_s(level))
    //   Phat(s;x,+) = A(s) * G_s(level - x)
    //   Phat(s;x,-) = 1 / (s + Lambda*rho*W_s(level))
    auto sp_transform = [&](double s) {
        const double denom = s + reset * rho * kernel_w(p, level, s, inner);
        if (dir == Direction::minus) return 1.0 / denom;
        return (s + reset) * kernel_g(p, level - x, s, inner) / denom;
    };

    // The outer inversion stays on the real axis regardless of cfg.method:
    // drift models carry exp(-s*(level-x)/Gamma) delay factors that blow up
    // on the Talbot contour wings for t below the ballistic crossing time.
    //
    // A Plus start with drift puts an atom of the first-passage law exactly at
    // the ballistic time t* = (level-x)/Gamma_+: the survival curve drops by
    // m = exp(-escape_rate * t*) there (no reset and no displacing jump before
    // drift alone reaches the level). Stehfest degrades badly on functions
    // with jumps, so the atom is peeled off analytically -- the remainder
    //   Chat(s) = Phat(s) - m * (1 - exp(-s t*)) / s
    // is the transform of a continuous curve -- and added back exactly.
    double raw;
    double overshoot_tol = 1e-4;
    if (dir == Direction::plus && p.speed_plus > 0.0 && x < level) {
        const double tstar = (level - x) / p.speed_plus;
        const double escape =
            reset + p.jump_rate_plus * (1.0 - p.jump_law_plus.mass_at_zero());
        const double m = std::exp(-escape * tstar);
        auto continuous_part = [&](double s) {
            return sp_transform(s) + m * std::expm1(-s * tstar) / s;
        };
        raw = gaver_stehfest(continuous_part, t, cfg.gs_order) + (t < tstar ? m : 0.0);
    } else {
        raw = gaver_stehfest(sp_transform, t, cfg.gs_order);
    }
    // Below the earliest ballistic crossing time the curve sits at exactly 1
    // and Stehfest wiggles around it by up to ~1e-3 (derivative kink ahead);
    // right at the kink the error peaks near 1e-2. Warnings use a relaxed
    // threshold there so routine curves do not spam stderr.
    if (p.speed_plus > 0.0) {
        const double kink =
            (dir == Direction::plus ? level - x : level) / p.speed_plus;
        if (t < 1.05 * kink) overshoot_tol = 2e-2;
    }

    if ((raw < -overshoot_tol || raw > 1.0 + overshoot_tol) &&
        survival_clamp_warnings.fetch_add(1) < 5) {
        std::cerr << "resetwalk: survival_general raw value " << raw << " at t=" << t
                  << " clamped to [0,1]\n";
    }
    return std::min(1.0, std::max(0.0, raw));
}

std::complex<double> char_function_t(const ModelParams& p, double omega, double t,
                                     double x0, Direction dir, const InversionConfig& cfg) {
    validate_params(p);
    check_time(t);
    if (dir == Direction::plus ? (x0 < 0.0) : (x0 > 0.0))
        throw std::invalid_argument("char_function_t: start position opposes start direction");
    return laplace_invert_complex(
        [&](std::complex<double> s) {
            return detail::propagator_fl_continued(p, omega, s, x0, dir);
        },
        t, cfg);
}

} // namespace resetwalk
