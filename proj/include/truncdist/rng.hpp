#pragma once

#include <cstdint>

namespace truncdist {

/// splitmix64 finalizer; full-avalanche 64-bit mixer.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Stable sub-seed derivation: hash of (master, tag, index). Parallel runs
/// that derive the same tuple always get the same stream.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t tag, std::uint64_t index) {
    std::uint64_t h = mix64(master ^ 0x6A09E667F3BCC909ULL);
    h = mix64(h ^ tag);
    h = mix64(h ^ index);
    return h;
}

/// xoshiro256++ stream, seeded from a 64-bit value via splitmix64.
/// Pure integer ops, so the sequence is identical on every platform.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& w : s_) {
            x += 0x9E3779B97F4A7C15ULL;
            std::uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
            z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
            w = z ^ (z >> 31);
        }
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform value with exactly `bits` random bits, 0 <= bits <= 64.
    std::uint64_t next_bits(int bits) {
        if (bits == 0) return 0;
        return next_u64() >> (64 - bits);
    }

    /// Uniform value in [0, bound) by masked rejection; bound >= 1.
    std::uint64_t next_below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        const int width = 64 - countl_zero_u64(bound - 1);
        for (;;) {
            const std::uint64_t v = next_bits(width);
            if (v < bound) return v;
        }
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    static int countl_zero_u64(std::uint64_t x) {
        if (x == 0) return 64;
        return __builtin_clzll(x);
    }

    std::uint64_t s_[4];
};

} // namespace truncdist
