#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace gsf {

/// Resolves 0 to the hardware concurrency (at least 1).
inline unsigned resolve_parallelism(unsigned requested) {
    if (requested > 0) return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

/// out[i] = fn(i) for i < n, computed on up to `parallelism` threads.
/// The result order never depends on scheduling. The first exception (in
/// index order) is rethrown after all workers stop.
template <class R, class Fn>
std::vector<R> parallel_map(std::size_t n, unsigned parallelism, Fn fn) {
    std::vector<R> out(n);
    const unsigned workers = std::min<std::size_t>(resolve_parallelism(parallelism), std::max<std::size_t>(n, 1));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(n);
    std::atomic<bool> failed{false};
    auto work = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n || failed.load()) return;
            try {
                out[i] = fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
                failed.store(true);
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return out;
}

}  // namespace gsf
