#pragma once

#include <cstdint>

namespace cubehit {

// SplitMix64: small, fast, and identical on every platform, which is what
// the bit-for-bit reproducibility contract needs (std::uniform_int_distribution
// is not portable across standard libraries).
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t state) : state_(state) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Unbiased draw from [0, bound) by rejection.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t threshold = (-bound) % bound;
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

  private:
    std::uint64_t state_;
};

inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Counter-based substream: trial t under a master seed gets its own
// generator, independent of trial execution order.
inline SplitMix64 trial_stream(std::uint64_t seed, std::uint64_t trial) {
    return SplitMix64(mix64(mix64(seed + 0x9e3779b97f4a7c15ull) ^ trial));
}

}  // namespace cubehit
