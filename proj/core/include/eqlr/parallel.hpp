#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace eqlr::parallel {

// Worker count: set_threads() if called with a positive value, else EQLR_THREADS, else hardware concurrency.
int threads();
void set_threads(int n);

// Runs f(0..n-1) on up to threads() workers. Results must be written by index, so output
// does not depend on scheduling. The exception from the smallest failing index is rethrown.
template <class F>
void parallel_for(std::size_t n, F&& f) {
    std::size_t workers = static_cast<std::size_t>(threads());
    if (workers <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    if (workers > n) workers = n;
    std::atomic<std::size_t> next{0};
    std::mutex err_mu;
    std::optional<std::size_t> err_index;
    std::exception_ptr err;
    auto body = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                f(i);
            } catch (...) {
                std::lock_guard lock(err_mu);
                if (!err_index || i < *err_index) {
                    err_index = i;
                    err = std::current_exception();
                }
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(body);
    body();
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

template <class T, class F>
std::vector<T> parallel_map(std::size_t n, F&& f) {
    std::vector<T> out(n);
    parallel_for(n, [&](std::size_t i) { out[i] = f(i); });
    return out;
}

}  // namespace eqlr::parallel
