#pragma once

#include <cstdint>

namespace dgv {

/// splitmix64. Chosen over std::mt19937 because the stream is trivial to
/// reproduce in any language, which keeps seeded experiments portable.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform in {0, .., bound-1}. Modulo bias is irrelevant at our bounds.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

}  // namespace dgv
