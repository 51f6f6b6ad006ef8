#pragma once

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace spanmet::detail {

// Runs fn(x) for every x in [0, count). With jobs > 1 the x values are handed
// out across threads; fn(x) must only write state owned by slot x, so merged
// results are independent of scheduling.
inline void parallel_for_index(int count, int jobs, const std::function<void(int)>& fn) {
    if (jobs <= 1 || count <= 1) {
        for (int x = 0; x < count; ++x) fn(x);
        return;
    }
    std::atomic<int> next{0};
    int workers = std::min(jobs, count);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (int x = next.fetch_add(1); x < count; x = next.fetch_add(1)) fn(x);
        });
    for (auto& t : pool) t.join();
}

}  // namespace spanmet::detail
