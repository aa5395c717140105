#pragma once

#include <cstddef>
#include <functional>

namespace tilekit {

// Worker cap: TILEKIT_THREADS when set (>= 1), hardware concurrency otherwise.
int max_threads();

// Runs fn(i) for i in [0, n) across up to max_threads() workers in disjoint
// index chunks. Callers write to per-index slots, so results are identical
// to the serial order.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace tilekit
