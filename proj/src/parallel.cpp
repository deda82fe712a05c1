#include "qgabor/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace qgabor {

namespace {
std::atomic<int> g_max_threads{0};
}

void set_max_threads(int n) { g_max_threads.store(n < 0 ? 0 : n); }

int max_threads() {
    const int cap = g_max_threads.load();
    if (cap > 0) return cap;  // an explicit request wins, even above hardware
    const int hw = static_cast<int>(std::thread::hardware_concurrency());
    return hw > 0 ? hw : 1;
}

void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& fn) {
    const int workers = static_cast<int>(std::min<std::int64_t>(max_threads(), n));
    if (workers <= 1) {
        for (std::int64_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers - 1));
    const std::int64_t chunk = (n + workers - 1) / workers;
    for (int w = 1; w < workers; ++w) {
        const std::int64_t lo = w * chunk;
        const std::int64_t hi = std::min<std::int64_t>(lo + chunk, n);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn]() {
            for (std::int64_t i = lo; i < hi; ++i) fn(i);
        });
    }
    const std::int64_t hi0 = std::min<std::int64_t>(chunk, n);
    for (std::int64_t i = 0; i < hi0; ++i) fn(i);
    for (std::thread& t : pool) t.join();
}

}  // namespace qgabor
