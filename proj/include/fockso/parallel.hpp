#pragma once

#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace fockso {

/// Runs fn(i) for i in [0, n) across hardware threads. Every index writes
/// only its own output slot, so results do not depend on the schedule and
/// sweeps stay byte-reproducible. Exceptions are rethrown on the caller.
template <class Fn>
void parallel_for(size_t n, Fn&& fn)
{
    unsigned hw = std::thread::hardware_concurrency();
    if (hw <= 1 || n < 16) {
        for (size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    unsigned workers = std::min<size_t>(hw, n);
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (size_t i = w; i < n; i += workers) fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

} // namespace fockso
