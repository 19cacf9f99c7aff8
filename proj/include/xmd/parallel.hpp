#pragma once

#include <cstddef>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace xmd {

// Thread cap for read-only fan-out passes. XMD_THREADS=0 (or unset) means
// auto; XMD_THREADS=1 forces serial execution.
inline unsigned thread_budget() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("XMD_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap > 0 && static_cast<unsigned>(cap) < hw) hw = static_cast<unsigned>(cap);
    }
    return hw;
}

// Runs fn(i) for i in [0, n). Each index must write only its own output slot;
// results are then identical to the serial order regardless of scheduling.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    const unsigned threads = thread_budget();
    if (threads <= 1 || n < 256) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    const std::size_t chunk = (n + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        const std::size_t lo = t * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&fn, lo, hi] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace xmd
