#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace mero::util {

/// Worker count resolution: explicit request > MEROMAP_WORKERS > hardware.
inline unsigned resolve_workers(unsigned requested = 0) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("MEROMAP_WORKERS")) {
        int v = std::atoi(env);
        if (v > 0) return unsigned(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

/// Run fn(block) for block = 0..n_blocks-1 on `workers` threads.  Each block
/// writes only its own slot of pre-sized output, so results are merged in
/// block order and are identical for every worker count.
inline void parallel_blocks(std::size_t n_blocks, unsigned workers,
                            const std::function<void(std::size_t)>& fn) {
    workers = resolve_workers(workers);
    if (workers <= 1 || n_blocks <= 1) {
        for (std::size_t b = 0; b < n_blocks; ++b) fn(b);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            std::size_t b = next.fetch_add(1);
            if (b >= n_blocks) return;
            fn(b);
        }
    };
    std::vector<std::thread> pool;
    unsigned spawn = unsigned(std::min<std::size_t>(workers, n_blocks));
    pool.reserve(spawn);
    for (unsigned w = 0; w < spawn; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

}  // namespace mero::util
