#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace nmds {

// Run fn(shard) for every shard in [0, shard_count) on up to `workers`
// threads. Shards are claimed from an atomic counter; callers must write
// results into per-shard slots and merge in shard order afterwards, so the
// merged output is independent of the worker count.
inline void run_sharded(std::size_t shard_count, std::size_t workers,
                        const std::function<void(std::size_t)>& fn) {
    if (workers == 0) workers = 1;
    if (workers > shard_count) workers = shard_count;
    if (workers <= 1) {
        for (std::size_t s = 0; s < shard_count; ++s) fn(s);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::exception_ptr first_error;
    std::mutex err_mutex;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t s = next.fetch_add(1);
                if (s >= shard_count) return;
                try {
                    fn(s);
                } catch (...) {
                    std::lock_guard<std::mutex> lk(err_mutex);
                    if (!first_error) first_error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace nmds
