#pragma once

#include <cstdint>

namespace ekpp {

// splitmix64 finalizer (Vigna, public domain). Used for seeding and for
// deriving per-run seeds from a base seed.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// xoshiro256** (Blackman & Vigna, public domain), seeded through splitmix64.
// A self-contained generator instead of <random> engines so that identical
// seeds give identical searches on every platform and standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t z = seed;
        for (auto& word : state_) {
            z += 0x9e3779b97f4a7c15ULL;
            word = mix64(z);
        }
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform in [0, bound); bound >= 1. Mask-and-reject, so unbiased.
    std::uint64_t below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        std::uint64_t mask = bound - 1;
        mask |= mask >> 1;
        mask |= mask >> 2;
        mask |= mask >> 4;
        mask |= mask >> 8;
        mask |= mask >> 16;
        mask |= mask >> 32;
        std::uint64_t r;
        do {
            r = next() & mask;
        } while (r >= bound);
        return r;
    }

    // Uniform integer in [lo, hi], inclusive.
    int int_in(int lo, int hi) {
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    // Uniform double in [0, 1).
    double unit() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int s) {
        return (x << s) | (x >> (64 - s));
    }

    std::uint64_t state_[4];
};

// Seed of the r-th independent run derived from a base seed:
// mix64(base ^ ((r + 1) * golden_gamma)). Documented so external tooling can
// reproduce a single run out of a repeated batch.
inline std::uint64_t run_seed(std::uint64_t base, int run) {
    return mix64(base ^ (0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(run) + 1)));
}

} // namespace ekpp
