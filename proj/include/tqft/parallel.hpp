#pragma once

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace tqft {

// Worker count: min(hardware, TQFT_THREADS if set).
inline unsigned worker_count() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("TQFT_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1 && static_cast<unsigned>(v) < hw) hw = static_cast<unsigned>(v);
    }
    return hw;
}

// Partition [0, n) across workers and sum the per-range results.  The
// aggregation is an integer sum, so the result is order-independent.
inline std::uint64_t parallel_count(std::uint64_t n,
                                    const std::function<std::uint64_t(std::uint64_t, std::uint64_t)>& range_count) {
    unsigned nw = worker_count();
    if (nw <= 1 || n < 2 * nw) return range_count(0, n);
    std::vector<std::uint64_t> partial(nw, 0);
    std::vector<std::thread> pool;
    pool.reserve(nw);
    for (unsigned w = 0; w < nw; ++w) {
        std::uint64_t lo = n * w / nw, hi = n * (w + 1) / nw;
        pool.emplace_back([&partial, w, lo, hi, &range_count] { partial[w] = range_count(lo, hi); });
    }
    for (auto& t : pool) t.join();
    std::uint64_t total = 0;
    for (auto v : partial) total += v;
    return total;
}

} // namespace tqft
