#pragma once

#include <cstdint>

namespace kufam {

/// SplitMix64: the fixed pseudorandom generator behind every seeded
/// construction in this library. One algorithm, stated in full here, so
/// corpora are byte-identical across platforms and compilers.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Unbiased draw from [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound) {
        // Rejection below the largest multiple of bound.
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % bound;
    }

    /// Deterministically derived child seed for stream `index`.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t index) {
        SplitMix64 g(seed ^ (0xA0761D6478BD642FULL * (index + 1)));
        return g.next();
    }

private:
    std::uint64_t state_;
};

}  // namespace kufam
