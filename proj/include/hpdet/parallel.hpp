#pragma once

#include <cstddef>
#include <functional>

namespace hpdet {

// HPDET_THREADS if set to a positive integer, else the hardware concurrency (at least 1).
unsigned thread_count();

// Runs fn(i) for i in [0, n) on up to `threads` workers, in contiguous chunks.
// The first exception thrown by a worker is rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn, unsigned threads = 0);

}  // namespace hpdet
