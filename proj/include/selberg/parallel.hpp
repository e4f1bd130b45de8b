#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace selberg {

// Worker count: hardware concurrency capped by SELBERG_LAB_THREADS.
inline std::size_t worker_count() {
    std::size_t n = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("SELBERG_LAB_THREADS")) {
        long cap = std::atol(env);
        if (cap >= 1) n = std::min<std::size_t>(n, static_cast<std::size_t>(cap));
    }
    return n;
}

// Runs fn(chunk_index, begin, end) over [0, n) split into fixed-size chunks.
// The chunk layout depends only on (n, chunk), never on the thread count, so
// per-chunk results can be reduced in a deterministic order.
template <class Fn>
void parallel_chunks(std::size_t n, std::size_t chunk, Fn&& fn) {
    if (n == 0) return;
    const std::size_t nchunks = (n + chunk - 1) / chunk;
    const std::size_t nthreads = std::min(worker_count(), nchunks);
    if (nthreads <= 1) {
        for (std::size_t c = 0; c < nchunks; ++c)
            fn(c, c * chunk, std::min(n, (c + 1) * chunk));
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (std::size_t w = 0; w < nthreads; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t c = w; c < nchunks; c += nthreads)
                fn(c, c * chunk, std::min(n, (c + 1) * chunk));
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace selberg
