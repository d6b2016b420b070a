#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

namespace resetwalk {

// splitmix64 step (Vigna / Steele et al.). Used both as a cheap mixer for
// deriving per-path seeds and as the state expander for xoshiro seeding.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// xoshiro256++ with a splitmix64-derived state. Every Monte Carlo path gets
// its own stream, keyed by (master seed, path index), so results are
// bit-identical no matter how paths are distributed over worker threads and
// no matter in which order the workers run.
class Rng {
public:
    Rng(std::uint64_t master_seed, std::uint64_t stream_index) {
        // Decorrelate the stream key before expanding; two mixing rounds keep
        // adjacent path indices far apart in state space.
        std::uint64_t key = master_seed;
        std::uint64_t k1 = splitmix64(key);
        key = k1 ^ (0x9E3779B97F4A7C15ULL * (stream_index + 0x632BE59BD9B4E019ULL));
        for (auto& w : s_) w = splitmix64(key);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform on [0,1): 53 random mantissa bits.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform on (0,1]; safe as a log() argument.
    double uniform01_open0() { return 1.0 - uniform01(); }

    // Exponential waiting time via inverse CDF. Hand-rolled (not
    // std::exponential_distribution) so that streams are reproducible across
    // standard libraries. rate <= 0 means the clock never fires.
    double exponential(double rate) {
        if (rate <= 0.0) return std::numeric_limits<double>::infinity();
        return -std::log(uniform01_open0()) / rate;
    }

    // true with probability p.
    bool bernoulli(double p) { return uniform01() < p; }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }
    std::uint64_t s_[4];
};

} // namespace resetwalk
