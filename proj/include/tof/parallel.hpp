#pragma once

// Deterministic fork-join helper.  Each index writes only its own slot, so
// results do not depend on the thread count; TOF_LAB_THREADS caps the pool.

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace tof {

inline int thread_budget() {
    int n = static_cast<int>(std::thread::hardware_concurrency());
    if (n <= 0) n = 1;
    if (const char* cap = std::getenv("TOF_LAB_THREADS")) {
        const int c = std::atoi(cap);
        if (c >= 1) n = std::min(n, c);
    }
    return n;
}

template <class Fn>
void parallel_for(std::size_t n, Fn&& fn) {
    const int threads = std::min<std::size_t>(thread_budget(), n ? n : 1);
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    std::exception_ptr first_error;
    std::mutex error_mutex;
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&fn, &first_error, &error_mutex, t, threads, n] {
            try {
                for (std::size_t i = t; i < n; i += threads) fn(i);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace tof
