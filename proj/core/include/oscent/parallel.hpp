#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace oscent::detail {

/// Runs fn(chunk_index) for every chunk_index in [0, chunk_count) on up to
/// `threads` workers. Chunks are claimed atomically, so callers that need
/// deterministic output must write into per-chunk slots and combine them in
/// chunk order afterwards. The first exception thrown by any worker is
/// rethrown on the calling thread.
inline void run_chunks(int chunk_count, int threads, const std::function<void(int)>& fn) {
    if (chunk_count <= 0) {
        return;
    }
    if (threads <= 1 || chunk_count == 1) {
        for (int i = 0; i < chunk_count; ++i) {
            fn(i);
        }
        return;
    }
    std::atomic<int> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_guard;

    auto worker = [&] {
        for (;;) {
            const int i = next.fetch_add(1);
            if (i >= chunk_count || failed.load()) {
                return;
            }
            try {
                fn(i);
            } catch (...) {
                {
                    std::lock_guard<std::mutex> lock(error_guard);
                    if (!error) {
                        error = std::current_exception();
                    }
                }
                failed.store(true);
                return;
            }
        }
    };

    const int workers = std::min(threads, chunk_count);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back(worker);
    }
    for (auto& t : pool) {
        t.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

} // namespace oscent::detail
