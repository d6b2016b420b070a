#include "resetwalk/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "resetwalk/parallel.hpp"

namespace resetwalk {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double direction_sign(Direction d) { return d == Direction::plus ? 1.0 : -1.0; }

Direction draw_direction(const ModelParams& p, Rng& rng) {
    return rng.bernoulli(p.direction_prob) ? Direction::plus : Direction::minus;
}

// Mean and standard error of the mean over data[i] for crossed[i], summed in
// index order so the result is bit-identical however paths were scheduled.
EstimateWithError reduce_estimate(const std::vector<double>& data,
                                  const std::vector<char>& accepted) {
    EstimateWithError est;
    est.n = data.size();
    std::uint64_t m = 0;
    double sum = 0.0;
    for (std::size_t i = 0; i < data.size(); ++i) {
        if (accepted[i]) {
            sum += data[i];
            ++m;
        }
    }
    est.censored = est.n - m;
    if (m == 0) {
        est.mean = std::numeric_limits<double>::quiet_NaN();
        est.std_error = std::numeric_limits<double>::quiet_NaN();
        return est;
    }
    est.mean = sum / static_cast<double>(m);
    if (m >= 2) {
        double ss = 0.0;
        for (std::size_t i = 0; i < data.size(); ++i) {
            if (accepted[i]) {
                const double d = data[i] - est.mean;
                ss += d * d;
            }
        }
        est.std_error = std::sqrt(ss / (static_cast<double>(m - 1) * static_cast<double>(m)));
    }
    return est;
}

} // namespace

PathSample simulate_path(const ModelParams& p, double horizon, double initial_position,
                         Direction initial_direction, Rng& rng) {
    validate_params(p);
    if (!(horizon >= 0.0)) throw std::invalid_argument("simulate_path: horizon must be >= 0");
    if (initial_direction == Direction::plus ? (initial_position < 0.0)
                                             : (initial_position > 0.0))
        throw std::invalid_argument("simulate_path: position sign opposes initial direction");

    PathSample out;
    out.initial_position = initial_position;
    out.initial_direction = initial_direction;
    out.horizon = horizon;

    double t = 0.0;
    double x = initial_position;
    Direction dir = initial_direction;
    while (true) {
        // Fixed draw order per segment keeps streams reproducible.
        const double wait_reset = rng.exponential(p.reset_rate);
        const double wait_jump = rng.exponential(p.jump_rate(dir));
        const double wait = std::min(wait_reset, wait_jump);
        if (!(t + wait <= horizon)) break; // also stops when both clocks are off
        t += wait;
        x += direction_sign(dir) * p.speed(dir) * wait;
        PathEvent ev;
        ev.time = t;
        if (wait_reset <= wait_jump) {
            dir = draw_direction(p, rng);
            x = 0.0;
            ev.kind = PathEvent::Kind::reset;
            ev.new_direction = dir;
            ev.position_after = 0.0;
        } else {
            const double size = p.jump_law(dir).sample(rng);
            x += direction_sign(dir) * size;
            ev.kind = PathEvent::Kind::jump;
            ev.new_direction = dir;
            ev.jump_size = size;
            ev.position_after = x;
        }
        out.events.push_back(ev);
    }
    return out;
}

double position_at(const ModelParams& p, const PathSample& sample, double t) {
    if (!(t >= 0.0 && t <= sample.horizon))
        throw std::invalid_argument("position_at: t outside [0, horizon]");
    double seg_time = 0.0;
    double seg_pos = sample.initial_position;
    Direction dir = sample.initial_direction;
    for (const PathEvent& ev : sample.events) {
        if (ev.time > t) break;
        seg_time = ev.time;
        seg_pos = ev.position_after;
        if (ev.kind == PathEvent::Kind::reset) dir = ev.new_direction;
    }
    return seg_pos + direction_sign(dir) * p.speed(dir) * (t - seg_time);
}

namespace {

// Shared snapshot walk: position at time t plus the exact at-origin flag
// (true iff nothing displaced the walker since the last reset, or since
// launch if no reset fired yet).
struct Snapshot {
    double position;
    bool at_origin;
};

Snapshot walk_to(const ModelParams& p, double t_final, Rng& rng) {
    double t = 0.0;
    double x = 0.0;
    Direction dir = draw_direction(p, rng);
    bool at_origin = true;
    while (true) {
        const double wait_reset = rng.exponential(p.reset_rate);
        const double wait_jump = rng.exponential(p.jump_rate(dir));
        const double wait = std::min(wait_reset, wait_jump);
        if (!(t + wait <= t_final)) {
            const double tail = t_final - t;
            x += direction_sign(dir) * p.speed(dir) * tail;
            if (p.speed(dir) > 0.0 && tail > 0.0) at_origin = false;
            return {x, at_origin};
        }
        t += wait;
        x += direction_sign(dir) * p.speed(dir) * wait;
        if (p.speed(dir) > 0.0 && wait > 0.0) at_origin = false;
        if (wait_reset <= wait_jump) {
            dir = draw_direction(p, rng);
            x = 0.0;
            at_origin = true;
        } else {
            const double size = p.jump_law(dir).sample(rng);
            x += direction_sign(dir) * size;
            if (size > 0.0) at_origin = false; // a zero-size jump displaces nothing
        }
    }
}

} // namespace

double sample_position(const ModelParams& p, double t, Rng& rng) {
    validate_params(p);
    if (!(t >= 0.0)) throw std::invalid_argument("sample_position: t must be >= 0");
    return walk_to(p, t, rng).position;
}

FirstPassageSample sample_first_passage(const ModelParams& p, double level, double cap,
                                        Rng& rng) {
    validate_params(p);
    if (!(level > 0.0)) throw std::invalid_argument("sample_first_passage: level must be > 0");
    if (!(cap > 0.0)) throw std::invalid_argument("sample_first_passage: cap must be > 0");

    double t = 0.0;
    double x = 0.0;
    Direction dir = draw_direction(p, rng);
    while (true) {
        const double drift_hit = (dir == Direction::plus && p.speed_plus > 0.0)
                                     ? t + (level - x) / p.speed_plus
                                     : kInf;
        const double wait_reset = rng.exponential(p.reset_rate);
        const double wait_jump = rng.exponential(p.jump_rate(dir));
        const double wait = std::min(wait_reset, wait_jump);
        const double t_event = t + wait;
        if (drift_hit <= std::min(t_event, cap)) return {true, drift_hit};
        if (!(t_event <= cap)) return {false, 0.0};
        t = t_event;
        x += direction_sign(dir) * p.speed(dir) * wait;
        if (wait_reset <= wait_jump) {
            dir = draw_direction(p, rng);
            x = 0.0;
        } else {
            const double size = p.jump_law(dir).sample(rng);
            if (dir == Direction::plus) {
                if (size > level - x) return {true, t};
                x += size;
            } else {
                x -= size;
            }
        }
    }
}

double default_censor_cap(double analytic_mfpt) {
    if (std::isfinite(analytic_mfpt) && analytic_mfpt > 0.0) return 50.0 * analytic_mfpt;
    return 1e4;
}

EstimateWithError estimate_mfpt(const ModelParams& p, double level, std::uint64_t n_paths,
                                double cap, std::uint64_t seed) {
    validate_params(p);
    if (n_paths == 0) throw std::invalid_argument("estimate_mfpt: n_paths must be > 0");
    std::vector<double> times(n_paths, 0.0);
    std::vector<char> crossed(n_paths, 0);
    parallel_for(n_paths, [&](std::size_t i) {
        Rng rng(seed, i);
        const FirstPassageSample fp = sample_first_passage(p, level, cap, rng);
        crossed[i] = fp.crossed ? 1 : 0;
        times[i] = fp.time;
    });
    return reduce_estimate(times, crossed);
}

std::vector<EstimateWithError> estimate_survival(const ModelParams& p, double level,
                                                 const std::vector<double>& t_grid,
                                                 std::uint64_t n_paths, std::uint64_t seed) {
    validate_params(p);
    if (t_grid.empty()) throw std::invalid_argument("estimate_survival: empty time grid");
    for (std::size_t j = 0; j < t_grid.size(); ++j) {
        if (!(t_grid[j] >= 0.0) || (j > 0 && !(t_grid[j] > t_grid[j - 1])))
            throw std::invalid_argument(
                "estimate_survival: time grid must be nonnegative and strictly increasing");
    }
    if (n_paths == 0) throw std::invalid_argument("estimate_survival: n_paths must be > 0");
    const double cap = std::max(t_grid.back(), std::numeric_limits<double>::min());

    std::vector<double> times(n_paths, 0.0);
    std::vector<char> crossed(n_paths, 0);
    parallel_for(n_paths, [&](std::size_t i) {
        Rng rng(seed, i);
        const FirstPassageSample fp = sample_first_passage(p, level, cap, rng);
        crossed[i] = fp.crossed ? 1 : 0;
        times[i] = fp.crossed ? fp.time : kInf;
    });

    // No row is censored: a path still alive at the horizon is exactly the
    // event each grid point counts, not a discarded sample.
    std::vector<EstimateWithError> curve(t_grid.size());
    for (std::size_t j = 0; j < t_grid.size(); ++j) {
        std::uint64_t alive = 0;
        for (std::size_t i = 0; i < n_paths; ++i)
            if (times[i] > t_grid[j]) ++alive;
        const double phat = static_cast<double>(alive) / static_cast<double>(n_paths);
        curve[j].mean = phat;
        curve[j].std_error = std::sqrt(phat * (1.0 - phat) / static_cast<double>(n_paths));
        curve[j].n = n_paths;
        curve[j].censored = 0;
    }
    return curve;
}

StationaryHistogram estimate_stationary(const ModelParams& p, std::uint64_t n_samples,
                                        double t_snapshot, std::uint64_t seed,
                                        const HistogramSpec& spec) {
    validate_params(p);
    if (!(p.reset_rate > 0.0))
        throw std::invalid_argument("estimate_stationary: requires reset_rate > 0");
    if (!(t_snapshot >= 20.0 / p.reset_rate))
        throw std::invalid_argument(
            "estimate_stationary: t_snapshot must be >= 20 / reset_rate for the "
            "snapshot to be effectively stationary");
    if (n_samples == 0) throw std::invalid_argument("estimate_stationary: n_samples must be > 0");
    if (!(spec.hi > spec.lo) || spec.bins == 0)
        throw std::invalid_argument("estimate_stationary: bad histogram spec");

    std::vector<double> xs(n_samples, 0.0);
    std::vector<char> at_origin(n_samples, 0);
    parallel_for(n_samples, [&](std::size_t i) {
        Rng rng(seed, i);
        const Snapshot snap = walk_to(p, t_snapshot, rng);
        xs[i] = snap.position;
        at_origin[i] = snap.at_origin ? 1 : 0;
    });

    StationaryHistogram out;
    out.spec = spec;
    out.n_samples = n_samples;
    out.counts.assign(spec.bins, 0);
    const double width = (spec.hi - spec.lo) / static_cast<double>(spec.bins);
    std::uint64_t atom_count = 0;
    for (std::size_t i = 0; i < n_samples; ++i) {
        if (at_origin[i]) {
            ++atom_count;
            continue;
        }
        const double x = xs[i];
        if (x < spec.lo || x >= spec.hi) {
            ++out.outside;
            continue;
        }
        auto b = static_cast<std::size_t>((x - spec.lo) / width);
        if (b >= spec.bins) b = spec.bins - 1; // hi-edge rounding guard
        ++out.counts[b];
    }

    const auto n = static_cast<double>(n_samples);
    const double p_atom = static_cast<double>(atom_count) / n;
    out.atom.mean = p_atom;
    out.atom.std_error = std::sqrt(p_atom * (1.0 - p_atom) / n);
    out.atom.n = n_samples;

    out.density.resize(spec.bins);
    out.density_stderr.resize(spec.bins);
    for (std::size_t b = 0; b < spec.bins; ++b) {
        const double pb = static_cast<double>(out.counts[b]) / n;
        out.density[b] = pb / width;
        out.density_stderr[b] = std::sqrt(pb * (1.0 - pb) / n) / width;
    }
    return out;
}

CharFunctionEstimate estimate_char_function(const ModelParams& p, double omega, double t,
                                            std::uint64_t n_samples, std::uint64_t seed) {
    validate_params(p);
    if (!(t >= 0.0)) throw std::invalid_argument("estimate_char_function: t must be >= 0");
    if (n_samples == 0)
        throw std::invalid_argument("estimate_char_function: n_samples must be > 0");
    std::vector<double> re(n_samples, 0.0), im(n_samples, 0.0);
    parallel_for(n_samples, [&](std::size_t i) {
        Rng rng(seed, i);
        const double x = walk_to(p, t, rng).position;
        re[i] = std::cos(omega * x);
        im[i] = std::sin(omega * x);
    });
    double sum_re = 0.0, sum_im = 0.0;
    for (std::size_t i = 0; i < n_samples; ++i) {
        sum_re += re[i];
        sum_im += im[i];
    }
    const auto n = static_cast<double>(n_samples);
    const double mean_re = sum_re / n;
    const double mean_im = sum_im / n;
    double ss_re = 0.0, ss_im = 0.0;
    for (std::size_t i = 0; i < n_samples; ++i) {
        ss_re += (re[i] - mean_re) * (re[i] - mean_re);
        ss_im += (im[i] - mean_im) * (im[i] - mean_im);
    }
    CharFunctionEstimate est;
    est.mean = {mean_re, mean_im};
    est.n = n_samples;
    if (n_samples >= 2) {
        est.std_error_re = std::sqrt(ss_re / ((n - 1.0) * n));
        est.std_error_im = std::sqrt(ss_im / ((n - 1.0) * n));
    }
    return est;
}

} // namespace resetwalk
