#pragma once

#include <cstdint>
#include <vector>

namespace turan {

// SplitMix64: seedable, splittable, 64-bit output per step
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // unbiased uniform draw from {0..m-1}
    std::uint64_t uniform_below(std::uint64_t m) {
        std::uint64_t limit = m * (~0ull / m);
        std::uint64_t r;
        do { r = next(); } while (r >= limit);
        return r % m;
    }

    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

inline std::uint64_t mix_u64(std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9E3779B97F4A7C15ull + (h << 12) + (h >> 4);
    SplitMix64 g(h);
    return g.next();
}

// per-subset stream seed: order-independent given the sorted elements
inline std::uint64_t subset_stream_seed(std::uint64_t seed, const std::vector<int>& sorted_elems) {
    std::uint64_t h = seed;
    for (int v : sorted_elems) h = mix_u64(h, static_cast<std::uint64_t>(v) + 1);
    return h;
}

} // namespace turan
