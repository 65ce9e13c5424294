#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace heckeafl {

/// Worker cap: HECKE_AFL_THREADS if set, else hardware concurrency.
inline unsigned thread_budget() {
    if (const char* env = std::getenv("HECKE_AFL_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return (unsigned)v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

/// Runs fn(thread_index, begin, end) over a partition of [0, total).
/// Results must be combined order-independently by the caller.
inline void parallel_chunks(size_t total,
                            const std::function<void(unsigned, size_t, size_t)>& fn) {
    unsigned nt = thread_budget();
    if (total == 0) return;
    if (nt <= 1 || total < 2 * nt) {
        fn(0, 0, total);
        return;
    }
    std::vector<std::thread> threads;
    size_t chunk = (total + nt - 1) / nt;
    for (unsigned t = 0; t < nt; ++t) {
        size_t lo = t * chunk, hi = std::min(total, lo + chunk);
        if (lo >= hi) break;
        threads.emplace_back(fn, t, lo, hi);
    }
    for (auto& th : threads) th.join();
}

} // namespace heckeafl
