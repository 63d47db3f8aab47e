#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace taut {

// Runs fn(i) for i in [0, count) on up to `workers` threads. Indices are handed
// out in contiguous blocks; callers write results into per-index slots so the
// outcome does not depend on the worker count. The first exception thrown by
// any fn is rethrown after all threads have joined.
template <typename Fn>
void parallel_for(std::size_t count, unsigned workers, Fn&& fn) {
    workers = std::max(1U, workers);
    if (workers == 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    const std::size_t nthreads = std::min<std::size_t>(workers, count);
    const std::size_t block = (count + nthreads - 1) / nthreads;
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> threads;
    threads.reserve(nthreads);
    for (std::size_t t = 0; t < nthreads; ++t) {
        threads.emplace_back([&, t] {
            const std::size_t begin = t * block;
            const std::size_t end = std::min(count, begin + block);
            try {
                for (std::size_t i = begin; i < end; ++i) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& th : threads) th.join();
    if (error) std::rethrow_exception(error);
}

} // namespace taut
