#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "resetwalk/model.hpp"
#include "resetwalk/rng.hpp"

namespace resetwalk {

// One recorded event of a simulated trajectory.
struct PathEvent {
    enum class Kind { reset, jump };
    double time = 0.0;
    Kind kind = Kind::reset;
    Direction new_direction = Direction::plus; // meaningful for resets
    double jump_size = 0.0;                    // meaningful for jumps
    double position_after = 0.0;               // exactly 0.0 for resets
};

// A trajectory over [0, horizon]: initial condition plus the ordered event
// list; between events the walker drifts affinely at the phase speed.
struct PathSample {
    double initial_position = 0.0;
    Direction initial_direction = Direction::plus;
    double horizon = 0.0;
    std::vector<PathEvent> events;
};

// Reconstruct the position at any 0 <= t <= horizon by replaying the drift
// segments between recorded events.
double position_at(const ModelParams& p, const PathSample& sample, double t);

struct FirstPassageSample {
    bool crossed = false;
    double time = 0.0; // crossing time; meaningful only when crossed
};

// Monte Carlo scalar estimate. mean/std_error are computed over the
// non-censored samples; n is the total number of paths launched.
struct EstimateWithError {
    double mean = 0.0;
    double std_error = 0.0;
    std::uint64_t n = 0;
    std::uint64_t censored = 0;
};

// --- single-path primitives (caller owns the RNG stream) -------------------

// Exact event-driven trajectory: competing exponential clocks for reset and
// jump, analytic drift in between. No time discretization anywhere.
PathSample simulate_path(const ModelParams& p, double horizon, double initial_position,
                         Direction initial_direction, Rng& rng);

// Position at time t of a walker started at the origin with direction drawn
// from direction_prob.
double sample_position(const ModelParams& p, double t, Rng& rng);

// First passage through level > 0 from the origin (direction drawn from
// direction_prob). Drift crossings are detected analytically inside a phase:
// moving Plus from x, the level is hit at (level - x)/speed_plus unless an
// event fires earlier; a Plus jump crosses iff its size exceeds level - x;
// leftward motion never crosses. Paths still alive at `cap` are censored.
FirstPassageSample sample_first_passage(const ModelParams& p, double level, double cap,
                                        Rng& rng);

// --- ensemble estimators (deterministic in (seed, n); each path i uses the
// --- substream keyed by (seed, i), so worker count and scheduling are
// --- irrelevant to the result) ----------------------------------------------

// Censor cap policy for MFPT runs: 50x the analytic mean when one is known
// and finite, otherwise 1e4 time units.
double default_censor_cap(double analytic_mfpt);

EstimateWithError estimate_mfpt(const ModelParams& p, double level, std::uint64_t n_paths,
                                double cap, std::uint64_t seed);

// Survival curve on a strictly increasing time grid (t >= 0 entries); paths
// are simulated once up to the last grid point. Entry j estimates
// P{first passage > t_j} with a binomial standard error; censored is always 0
// (a path alive at the horizon is the counted event, not a lost sample).
std::vector<EstimateWithError> estimate_survival(const ModelParams& p, double level,
                                                 const std::vector<double>& t_grid,
                                                 std::uint64_t n_paths, std::uint64_t seed);

struct HistogramSpec {
    double lo = -10.0;
    double hi = 10.0;
    std::size_t bins = 200;
};

// Snapshot estimate of the stationary law. The origin atom is identified by
// an exact "nothing displaced me since the last reset" flag carried through
// the simulation -- never by comparing floating-point positions.
// Requires reset_rate > 0 and t_snapshot >= 20 / reset_rate.
struct StationaryHistogram {
    HistogramSpec spec;
    EstimateWithError atom;            // P{X = 0}
    std::vector<std::uint64_t> counts; // continuous-part samples per bin
    std::vector<double> density;       // counts / (n * bin_width)
    std::vector<double> density_stderr;
    std::uint64_t n_samples = 0;
    std::uint64_t outside = 0; // displaced samples falling outside [lo, hi)
};
StationaryHistogram estimate_stationary(const ModelParams& p, std::uint64_t n_samples,
                                        double t_snapshot, std::uint64_t seed,
                                        const HistogramSpec& spec = {});

struct CharFunctionEstimate {
    std::complex<double> mean;
    double std_error_re = 0.0;
    double std_error_im = 0.0;
    std::uint64_t n = 0;
};
CharFunctionEstimate estimate_char_function(const ModelParams& p, double omega, double t,
                                            std::uint64_t n_samples, std::uint64_t seed);

} // namespace resetwalk
