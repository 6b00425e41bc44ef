#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace regft {

// Runs fn(i) for i in [0, n). Each index owns its output slot, so results
// are identical for any worker count. fn must not touch shared mutable
// state.
template <class Fn>
void parallel_for(std::size_t n, int workers, Fn&& fn) {
    if (n == 0) return;
    const std::size_t nworkers =
        workers <= 1 ? 1 : std::min<std::size_t>(static_cast<std::size_t>(workers), n);
    if (nworkers == 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(nworkers);
    for (std::size_t w = 0; w < nworkers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                fn(i);
            }
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace regft
