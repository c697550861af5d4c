#pragma once

// SplitMix64: tiny, fast, and stable across platforms. The search harness
// keys every attempt with its own stream (seed + offset), so records never
// depend on scheduling order.

#include <cstdint>

namespace tropic {

struct SplitMix64 {
    uint64_t state = 0;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [lo, hi]; the tiny modulo bias is irrelevant here
    long long range(long long lo, long long hi) {
        return lo + (long long)(next() % (uint64_t)(hi - lo + 1));
    }
};

}  // namespace tropic
