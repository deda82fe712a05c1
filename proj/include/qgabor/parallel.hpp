#pragma once

#include <cstdint>
#include <functional>

namespace qgabor {

/// Global cap on worker threads (0 = hardware concurrency). The parallel
/// loops below write disjoint output slots per index, so results are
/// identical for any thread count.
void set_max_threads(int n);
int max_threads();

/// Runs fn(i) for i in [0, n), split into contiguous chunks across threads.
void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& fn);

}  // namespace qgabor
