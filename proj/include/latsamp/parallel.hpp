#pragma once

#include <cstdint>
#include <functional>

namespace latsamp {

// Worker count: LS_THREADS when set to a positive integer, else the hardware
// concurrency, and at least 1.
int thread_count();

// Runs fn(i) for i in [0, n) across thread_count() workers with static
// chunking. Results must not depend on the partition: derive any randomness
// from i, never from the worker.
void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& fn);

}  // namespace latsamp
