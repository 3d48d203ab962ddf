#ifndef KWISE_PARALLEL_HPP
#define KWISE_PARALLEL_HPP

#include <cstdint>
#include <thread>
#include <vector>

namespace kwise {

/// Worker count: `requested` if nonzero, else the KWISE_THREADS environment
/// variable, else hardware concurrency. Always at least one.
unsigned resolve_threads(unsigned requested);

/// Splits [0, total) into contiguous chunks, evaluates `work(lo, hi)` on each
/// chunk in its own thread, and folds the chunk results strictly left to
/// right. The result is therefore identical for every worker count.
template <typename R, typename Work, typename Merge>
R parallel_chunks(std::uint64_t total, unsigned threads, Work&& work, Merge&& merge) {
    threads = resolve_threads(threads);
    if (total == 0) return R{};
    std::uint64_t chunk_count = std::min<std::uint64_t>(threads, total);
    if (chunk_count <= 1) return work(std::uint64_t{0}, total);

    std::vector<R> results(chunk_count);
    std::vector<std::thread> pool;
    pool.reserve(chunk_count);
    const std::uint64_t base = total / chunk_count;
    const std::uint64_t extra = total % chunk_count;
    std::uint64_t lo = 0;
    for (std::uint64_t c = 0; c < chunk_count; ++c) {
        const std::uint64_t hi = lo + base + (c < extra ? 1 : 0);
        pool.emplace_back([&results, &work, c, lo, hi] { results[c] = work(lo, hi); });
        lo = hi;
    }
    for (auto& th : pool) th.join();

    R acc = std::move(results[0]);
    for (std::uint64_t c = 1; c < chunk_count; ++c) {
        acc = merge(std::move(acc), std::move(results[c]));
    }
    return acc;
}

} // namespace kwise

#endif
