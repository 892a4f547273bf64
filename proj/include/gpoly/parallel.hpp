#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace gpoly::detail {

/// Applies fn to every item, possibly across worker threads. Results are
/// gathered by input index and exceptions are rethrown for the earliest
/// failing item, so the outcome does not depend on the worker count.
template <class In, class Fn>
auto parallel_map(const std::vector<In>& items, Fn fn, unsigned workers = 0) {
    using Out = decltype(fn(items.front()));
    std::vector<Out> results(items.size());
    if (items.empty()) {
        return results;
    }
    if (workers == 0) {
        workers = std::thread::hardware_concurrency();
    }
    workers = unsigned(std::min<std::size_t>(std::max(workers, 1u), items.size()));
    if (workers == 1) {
        for (std::size_t i = 0; i < items.size(); ++i) {
            results[i] = fn(items[i]);
        }
        return results;
    }
    std::vector<std::exception_ptr> errors(items.size());
    std::atomic<std::size_t> next{0};
    const auto run = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= items.size()) {
                return;
            }
            try {
                results[i] = fn(items[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back(run);
    }
    for (std::thread& t : pool) {
        t.join();
    }
    for (const std::exception_ptr& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return results;
}

}  // namespace gpoly::detail
