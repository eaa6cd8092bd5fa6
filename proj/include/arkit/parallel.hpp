#pragma once

#include <cstddef>
#include <functional>

namespace arkit {

// Worker count: hardware concurrency, capped by the ARKIT_THREADS
// environment variable when set to a positive integer.
unsigned worker_count();

// Runs fn(i) for i in [0, count) on up to worker_count() threads. Callers
// write results into per-index slots so output order never depends on
// scheduling. The first exception thrown by any fn is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace arkit
