#pragma once

#include <cstdint>
#include <random>

#include "gfp.hpp"

namespace factorlab {

// Deterministic randomness for the whole workbench: std::mt19937_64 streams
// seeded either directly or through a counter-based split, so trial i of a
// batch sees the same draws whether trials run serially or in parallel.
// Bounded draws use rejection sampling on the raw 64-bit output; nothing
// depends on the standard library's distribution implementations.
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    // SplitMix64 finalizer applied to the (seed, stream) pair.
    static uint64_t derive(uint64_t seed, uint64_t stream) noexcept {
        uint64_t z = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    static Rng substream(uint64_t seed, uint64_t stream) { return Rng(derive(seed, stream)); }

    uint64_t next() { return gen_(); }

    // Uniform in [0, bound), bound >= 1.
    uint64_t below(uint64_t bound) {
        uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        uint64_t v;
        do {
            v = gen_();
        } while (v >= limit);
        return v % bound;
    }

    // Uniform in [lo, hi] inclusive.
    int64_t range(int64_t lo, int64_t hi) {
        return lo + static_cast<int64_t>(below(static_cast<uint64_t>(hi - lo) + 1));
    }

    uint32_t field_value(const PrimeField& f) {
        return static_cast<uint32_t>(below(f.modulus()));
    }

private:
    std::mt19937_64 gen_;
};

} // namespace factorlab
