#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace pach {

/// Splits [0, count) into `jobs` contiguous chunks and runs
/// fn(begin, end, chunk) on each. Chunk boundaries depend only on count and
/// jobs; callers merge per-chunk results in chunk order to stay
/// deterministic. The first exception thrown by any chunk is rethrown.
template <typename Fn>
void parallel_chunks(std::size_t count, unsigned jobs, Fn&& fn) {
    jobs = std::max(1u, jobs);
    const std::size_t chunks = std::min<std::size_t>(jobs, std::max<std::size_t>(count, 1));
    if (chunks <= 1) {
        fn(std::size_t{0}, count, std::size_t{0});
        return;
    }
    std::vector<std::exception_ptr> errors(chunks);
    std::vector<std::thread> workers;
    workers.reserve(chunks);
    for (std::size_t c = 0; c < chunks; ++c) {
        const std::size_t begin = count * c / chunks;
        const std::size_t end = count * (c + 1) / chunks;
        workers.emplace_back([&, begin, end, c] {
            try {
                fn(begin, end, c);
            } catch (...) {
                errors[c] = std::current_exception();
            }
        });
    }
    for (auto& w : workers) w.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

inline std::size_t chunk_count(std::size_t count, unsigned jobs) {
    return std::min<std::size_t>(std::max(1u, jobs), std::max<std::size_t>(count, 1));
}

}  // namespace pach
