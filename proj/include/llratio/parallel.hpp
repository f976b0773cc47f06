#pragma once

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <thread>
#include <vector>

namespace llr {

// Job count used when a caller passes jobs <= 0: the LLRATIO_JOBS environment
// variable if set to a positive integer, otherwise hardware_concurrency().
inline int default_jobs() {
    if (const char* e = std::getenv("LLRATIO_JOBS")) {
        const int v = std::atoi(e);
        if (v > 0) return v;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc != 0 ? static_cast<int>(hc) : 1;
}

// Runs fn(i) for every i in [begin, end). Indices are claimed atomically one
// at a time; each index writes only its own outputs, so results are identical
// for any job count. Callers that reduce across indices must combine the
// per-index values in index order to keep bitwise determinism.
template <class Fn>
void parallel_for(int64_t begin, int64_t end, int jobs, Fn&& fn) {
    if (end <= begin) return;
    if (jobs <= 0) jobs = default_jobs();
    const int64_t n = end - begin;
    if (jobs == 1 || n == 1) {
        for (int64_t i = begin; i < end; ++i) fn(i);
        return;
    }
    std::atomic<int64_t> next{begin};
    auto worker = [&] {
        for (;;) {
            const int64_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= end) return;
            fn(i);
        }
    };
    const int nt = static_cast<int>(std::min<int64_t>(jobs, n));
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<size_t>(nt));
    for (int t = 0; t < nt; ++t) pool.emplace_back(worker);
}

} // namespace llr
