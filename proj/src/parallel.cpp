#include "tilekit/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace tilekit {

int max_threads() {
    unsigned hw = std::thread::hardware_concurrency();
    int cap = hw == 0 ? 1 : static_cast<int>(hw);
    if (const char* env = std::getenv("TILEKIT_THREADS")) {
        int requested = std::atoi(env);
        if (requested >= 1) cap = std::min(cap, requested);
    }
    return std::max(cap, 1);
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    int workers = max_threads();
    if (workers <= 1 || n < 64) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::size_t chunk = (n + static_cast<std::size_t>(workers) - 1) / workers;
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        std::size_t lo = chunk * static_cast<std::size_t>(w);
        std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (std::thread& t : pool) t.join();
}

}  // namespace tilekit
