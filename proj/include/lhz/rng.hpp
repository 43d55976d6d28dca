#pragma once

#include <cstdint>

namespace lhz {

// splitmix64: used both as a stream splitter and as the uniform source.
// Keeping the generator self-contained makes instances bit-identical
// across platforms and standard-library versions.
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform double in [0, 1)
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // uniform integer in [0, n)
    uint64_t below(uint64_t n) {
        // rejection-free modulo bias is negligible for our n (< 2^20),
        // but do the multiply-shift reduction anyway
        return static_cast<uint64_t>((static_cast<__uint128_t>(next()) * n) >> 64);
    }
};

// Derive an independent stream for (root, key) without sequential draws,
// so ensemble subsets reproduce in isolation.
inline uint64_t derive_stream(uint64_t root, uint64_t key) {
    SplitMix64 g(root ^ (0x9e3779b97f4a7c15ULL * (key + 1)));
    g.next();
    return g.next();
}

}  // namespace lhz
