#pragma once
// pool.hpp - minimal fork-join helper for index-space parallelism.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace fracpow {

// Runs fn(i) for every i in [0, n). Work is claimed dynamically, so callers
// must write results into per-index slots (not append) to stay deterministic
// across worker counts. The first exception thrown by any task is rethrown.
template <typename Fn>
void parallel_for(std::size_t n, unsigned workers, Fn&& fn) {
    if (workers <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex err_mutex;
    auto body = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < n && !failed.load();) {
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!first_error) first_error = std::current_exception();
                failed.store(true);
            }
        }
    };
    const unsigned count = (unsigned)std::min<std::size_t>(workers, n);
    std::vector<std::thread> threads;
    threads.reserve(count);
    for (unsigned w = 0; w < count; ++w) threads.emplace_back(body);
    for (auto& t : threads) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace fracpow
