#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace txsite {

inline unsigned resolve_threads(unsigned requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

// Static block partition of [0, n) over `threads` workers. Each worker gets a
// contiguous chunk; callers must only write to disjoint slots so the result is
// independent of the worker count and schedule.
//
// fn(begin, end) is invoked once per non-empty chunk.
template <class Fn>
void parallel_for_chunks(int64_t n, unsigned threads, Fn&& fn) {
    threads = resolve_threads(threads);
    if (n <= 0) return;
    if (threads <= 1 || n == 1) {
        fn(int64_t{0}, n);
        return;
    }
    if (static_cast<int64_t>(threads) > n) threads = static_cast<unsigned>(n);

    const int64_t base = n / threads;
    const int64_t extra = n % threads;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    int64_t begin = 0;
    for (unsigned w = 0; w < threads; ++w) {
        const int64_t len = base + (static_cast<int64_t>(w) < extra ? 1 : 0);
        const int64_t end = begin + len;
        pool.emplace_back([begin, end, &fn] { fn(begin, end); });
        begin = end;
    }
    for (auto& t : pool) t.join();
}

}  // namespace txsite
