#pragma once

#include <complex>
#include <functional>

#include "resetwalk/model.hpp"

namespace resetwalk {

// Numerical Laplace inversion back-end.
//
//   gaver_stehfest : Salzer-accelerated Gaver functionals. Real abscissas
//                    s = k ln2 / t only, so it tolerates transforms that are
//                    awkward off the real axis (delay factors exp(-s*t0));
//                    the default for survival curves and MFPT kernels.
//   fixed_talbot   : deformed Bromwich contour (Abate-Valko fixed
//                    parameterization). Needs the transform at complex s but
//                    converges geometrically; the default for oscillatory
//                    targets (characteristic functions in t).
struct InversionConfig {
    enum class Method { gaver_stehfest, fixed_talbot };
    Method method = Method::gaver_stehfest;
    int gs_order = 14;     // even, 4..20 (weights overflow beyond 20)
    int talbot_nodes = 32; // contour nodes per half

    static InversionConfig gaver(int order = 14) {
        return {Method::gaver_stehfest, order, 32};
    }
    static InversionConfig talbot(int nodes = 32) {
        return {Method::fixed_talbot, 14, nodes};
    }
};

// Invert a real-valued transform, callable on the positive real axis only.
// Only the Gaver-Stehfest method applies; requesting fixed_talbot throws.
double laplace_invert(const std::function<double(double)>& fhat, double t,
                      const InversionConfig& cfg = {});

// Invert a transform callable at complex s; the original is assumed real
// (Talbot then uses the conjugate-symmetric half contour).
double laplace_invert(const std::function<std::complex<double>(std::complex<double>)>& fhat,
                      double t, const InversionConfig& cfg = {});

// Invert a transform whose original is complex-valued (e.g. a characteristic
// function in t). Talbot walks the full contour; Gaver-Stehfest acts
// component-wise on the real abscissas.
std::complex<double>
laplace_invert_complex(const std::function<std::complex<double>(std::complex<double>)>& fhat,
                       double t, const InversionConfig& cfg = {});

// ---------------------------------------------------------------------------
// General-jump-law first passage through level > 0 (double-transform route)
// ---------------------------------------------------------------------------
// The rightward channel's resolvent kernel
//
//   G_s(z) = L_r^{-1}[ 1 / ( r * (s + Lambda + lambda_+ (1 - hhat_+(r)) + Gamma_+ r) ) ](z)
//
// carries the whole jump-law dependence; survival transforms and MFPTs for
// any start follow from it by one renewal identity. first_passage_kernel
// exposes G_s(z) so the two inversion back-ends can be cross-checked.
double first_passage_kernel(const ModelParams& p, double z, double s,
                            const InversionConfig& cfg = {});

// Mean first-passage time to `level` from (x, dir); +infinity when the level
// is unreachable on average (rho = 0, or a Minus start with reset_rate = 0).
// Throws std::runtime_error if the renewal denominator 1 - Lambda*G_0(level)
// comes out non-positive (numerical breakdown of the kernel inversion).
double mfpt_general(const ModelParams& p, double level, double x, Direction dir,
                    const InversionConfig& cfg = {});
// Start at the origin with direction drawn from direction_prob.
double mfpt_general_unconditional(const ModelParams& p, double level,
                                  const InversionConfig& cfg = {});

// Survival probability (level not yet reached by time t) via double numerical
// inversion: r->z with the kernel, then s->t. t = 0 returns exactly 1 (the
// start lies strictly below the level). Result clamped to [0,1]; a
// warning is logged if the raw value leaves the interval by more than 1e-4
// (2e-2 within 5% of a ballistic atom, where the kink limits the outer
// method). Method routing is structural: the inner z-inversions always use
// the Talbot contour (the outer pass amplifies inner noise ~1e4-fold, so the
// kernels need near-machine accuracy), the outer s-inversion always uses
// Gaver-Stehfest (drift models carry delay factors exp(-s*t0) that overflow
// on Talbot contour wings for t < t0), and a Plus start with drift has its
// ballistic survival atom at (level-x)/speed_plus split off analytically.
// cfg supplies the order/node counts for the two passes.
double survival_general(const ModelParams& p, double level, double x, Direction dir,
                        double t, const InversionConfig& cfg = {});

// E[exp(i omega X_t)] for a walker started at (x0, dir), by inverting the
// Fourier-Laplace propagator in s at fixed omega.
std::complex<double> char_function_t(const ModelParams& p, double omega, double t,
                                     double x0, Direction dir,
                                     const InversionConfig& cfg = InversionConfig::talbot());

} // namespace resetwalk
