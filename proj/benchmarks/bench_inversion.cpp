#include <benchmark/benchmark.h>

#include "resetwalk/analytic.hpp"
#include "resetwalk/inversion.hpp"

using namespace resetwalk;

// The two Laplace-inversion back-ends on the first-passage kernel G_0(z).
static void BM_KernelGaverStehfest(benchmark::State& state) {
    const ModelParams p = exp_jump_params(0.5, 0.5, 0.5, 2.0, 1.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            first_passage_kernel(p, 1.0, 0.0, InversionConfig::gaver(14)));
}
BENCHMARK(BM_KernelGaverStehfest);

static void BM_KernelTalbot(benchmark::State& state) {
    const ModelParams p = exp_jump_params(0.5, 0.5, 0.5, 2.0, 1.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            first_passage_kernel(p, 1.0, 0.0, InversionConfig::talbot(32)));
}
BENCHMARK(BM_KernelTalbot);

// Kernel-route MFPT (one renewal identity on top of the kernel inversion).
static void BM_MfptGeneral(benchmark::State& state) {
    const ModelParams p = exp_jump_params(1.0, 0.5, 1.0, 4.0, 1.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            mfpt_general_unconditional(p, 1.0, InversionConfig::talbot(32)));
}
BENCHMARK(BM_MfptGeneral);

// Double inversion for one survival value (inner Talbot kernels, outer
// Gaver-Stehfest time pass).
static void BM_SurvivalGeneral(benchmark::State& state) {
    const ModelParams p = exp_jump_params(1.0, 0.5, 1.0, 4.0, 1.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            survival_general(p, 1.0, 0.0, Direction::plus, 5.0));
}
BENCHMARK(BM_SurvivalGeneral);

// Propagator evaluation at one Fourier-Laplace point.
static void BM_PropagatorFL(benchmark::State& state) {
    ModelParams p;
    p.reset_rate = 0.8;
    p.direction_prob = 0.4;
    p.speed_plus = 1.0;
    p.speed_minus = 0.5;
    p.jump_rate_plus = 0.6;
    p.jump_law_plus = JumpLaw::exponential(1.5);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            propagator_fl(p, 1.3, {0.7, 0.4}, 0.2, Direction::plus));
}
BENCHMARK(BM_PropagatorFL);
