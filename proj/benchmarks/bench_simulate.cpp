#include <benchmark/benchmark.h>

#include "resetwalk/simulate.hpp"

using namespace resetwalk;

namespace {
ModelParams mixed_model() {
    ModelParams p;
    p.reset_rate = 1.0;
    p.direction_prob = 0.5;
    p.speed_plus = 1.0;
    p.speed_minus = 1.0;
    p.jump_rate_plus = 1.0;
    p.jump_law_plus = JumpLaw::exponential(4.0);
    return p;
}
} // namespace

// Event-driven trajectory generation, ~2 events per time unit here.
static void BM_SimulatePath(benchmark::State& state) {
    const ModelParams p = mixed_model();
    const double horizon = static_cast<double>(state.range(0));
    Rng rng(1, 0);
    for (auto _ : state) {
        const PathSample s = simulate_path(p, horizon, 0.0, Direction::plus, rng);
        benchmark::DoNotOptimize(s.events.size());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(horizon));
}
BENCHMARK(BM_SimulatePath)->Arg(100)->Arg(1000);

// Single first-passage draw (mean crossing time ~28 for these parameters).
static void BM_FirstPassage(benchmark::State& state) {
    const ModelParams p = mixed_model();
    Rng rng(2, 0);
    for (auto _ : state) {
        const FirstPassageSample f = sample_first_passage(p, 1.0, 1e4, rng);
        benchmark::DoNotOptimize(f.time);
    }
}
BENCHMARK(BM_FirstPassage);

// Ensemble MFPT estimate: per-path substreams, parallel_for over paths.
static void BM_EstimateMfpt(benchmark::State& state) {
    const ModelParams p = mixed_model();
    const auto n = static_cast<std::uint64_t>(state.range(0));
    std::uint64_t seed = 1;
    for (auto _ : state) {
        const EstimateWithError e = estimate_mfpt(p, 1.0, n, 1e4, seed++);
        benchmark::DoNotOptimize(e.mean);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(n));
}
BENCHMARK(BM_EstimateMfpt)->Arg(1000)->Arg(10000);

// Stationary snapshot sampling at t = 20 / reset_rate.
static void BM_SamplePosition(benchmark::State& state) {
    const ModelParams p = mixed_model();
    Rng rng(3, 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_position(p, 20.0, rng));
    }
}
BENCHMARK(BM_SamplePosition);

BENCHMARK_MAIN();
