/*
Copyright 2026 The socval Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/
#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace socval::parallel {

/// Caps worker threads for every parallel loop in the process. 0 restores the
/// default (hardware concurrency).
void set_max_threads(unsigned threads);
unsigned max_threads();

namespace detail {
// True inside a worker; nested loops then run inline so that sweep cells
// and per-node kernels never oversubscribe.
bool& in_worker();

template <typename Fn>
void run_workers(unsigned workers, Fn&& body) {
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            in_worker() = true;
            try {
                body(w);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}
} // namespace detail

/// Splits [0, n) into contiguous ranges and calls fn(begin, end) on each.
/// Ranges are disjoint, so callers write to disjoint output slots.
template <typename Fn>
void for_ranges(std::size_t n, Fn&& fn, std::size_t min_grain = 8192) {
    const unsigned cap = detail::in_worker() ? 1u : max_threads();
    const std::size_t chunks = std::min<std::size_t>(cap, std::max<std::size_t>(1, n / min_grain));
    if (chunks <= 1) {
        fn(std::size_t{0}, n);
        return;
    }
    detail::run_workers(static_cast<unsigned>(chunks), [&](unsigned w) {
        const std::size_t begin = n * w / chunks;
        const std::size_t end = n * (w + 1) / chunks;
        fn(begin, end);
    });
}

/// Calls fn(i) for every i in [0, n) with dynamic scheduling. Output must be
/// keyed by i for results to be independent of scheduling order.
template <typename Fn>
void for_each_index(std::size_t n, Fn&& fn) {
    const unsigned cap = detail::in_worker() ? 1u : max_threads();
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(cap, n));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    detail::run_workers(workers, [&](unsigned) {
        for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
    });
}

} // namespace socval::parallel
