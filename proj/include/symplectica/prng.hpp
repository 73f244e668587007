#pragma once

// SplitMix64: 64-bit state, golden-ratio increment, two multiply-xorshift
// rounds. Tiny, seedable from any integer, and identical on every platform,
// which is all the samplers here need.

#include <cstdint>

namespace symplectica {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, bound); bound > 0. Rejection keeps it unbiased.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t x;
        do x = next(); while (x >= limit);
        return x % bound;
    }

private:
    std::uint64_t state_;
};

} // namespace symplectica
