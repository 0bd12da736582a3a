#pragma once

// Deterministic parallel map: run fn(i) for i in [0, n) on up to `jobs`
// threads; results land in slot i, so output order never depends on the
// schedule. Exceptions are captured and rethrown on the caller thread.

#include <atomic>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace fdp {

inline void parallel_for(size_t n, int jobs, const std::function<void(size_t)>& fn) {
    if (jobs <= 1 || n <= 1) {
        for (size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    size_t workers = std::min<size_t>(static_cast<size_t>(jobs), n);
    std::atomic<size_t> next{0};
    std::vector<std::exception_ptr> errs(workers);
    std::vector<std::thread> pool;
    for (size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
            } catch (...) {
                errs[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
}

}  // namespace fdp
