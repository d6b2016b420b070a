#include "resetwalk/parallel.hpp"

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace resetwalk {

std::size_t worker_count() {
    std::size_t n = 0;
    if (const char* env = std::getenv("RESETWALK_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) n = static_cast<std::size_t>(v);
        } catch (...) {
            // Malformed value: fall through to auto-detection.
        }
    }
    if (n == 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        n = hw > 0 ? hw : 1;
    }
    return n;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
    if (n == 0) return;
    const std::size_t workers = std::min(worker_count(), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    // Static block partition: worker w handles [w*chunk, min((w+1)*chunk, n)).
    const std::size_t chunk = (n + workers - 1) / workers;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(lo + chunk, n);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &body] {
            for (std::size_t i = lo; i < hi; ++i) body(i);
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace resetwalk
