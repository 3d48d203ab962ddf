#ifndef KWISE_RNG_HPP
#define KWISE_RNG_HPP

#include <cstdint>
#include <vector>

namespace kwise {

/// splitmix64: tiny, fully specified, identical across platforms. Used for
/// every seeded draw in the library so outputs are reproducible bit for bit.
struct SplitMix64 {
    std::uint64_t state = 0;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, range) by rejection; exactly uniform, no modulo bias.
    std::uint64_t bounded(std::uint64_t range) {
        const std::uint64_t limit = range * ((~std::uint64_t{0}) / range);
        for (;;) {
            const std::uint64_t u = next();
            if (u < limit) return u % range;
        }
    }

    /// Uniform signed integer in [lo, hi].
    long range(long lo, long hi) {
        return lo + static_cast<long>(bounded(static_cast<std::uint64_t>(hi - lo + 1)));
    }
};

/// Uniformly random r-subset of {0,...,u-1}, sorted (Floyd's algorithm).
std::vector<long> sample_combination(SplitMix64& rng, long u, long r);

} // namespace kwise

#endif
