#pragma once

#include <cstddef>
#include <functional>

namespace resetwalk {

// Number of worker threads to use. Honors the RESETWALK_THREADS environment
// variable (0 or unset means "all hardware threads"); re-read on every call
// so tests can change it between runs.
std::size_t worker_count();

// Runs body(i) for i in [0, n) split into contiguous blocks over
// worker_count() threads. Workers only ever write to disjoint slots of
// caller-owned storage indexed by i, so the result is independent of the
// thread count and of scheduling order; any reduction happens afterwards,
// sequentially, in index order.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

} // namespace resetwalk
