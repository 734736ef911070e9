#pragma once

// Deterministic random numbers for the experiment harness: xoshiro256**
// seeded through splitmix64, with rejection sampling for bounded draws.
// Nothing here depends on the platform or the standard library's
// distributions, so a fixed seed reproduces byte-identical runs everywhere.
//
// Substreams: worker/iteration k of seed s uses the generator seeded with
// derive(s, k) = splitmix(s XOR 0x9E3779B97F4A7C15 * (k + 1)).  Results
// merged from substreams must not depend on scheduling order.

#include <array>

#include "listdec/common.hpp"

namespace listdec {

struct SplitMix64 {
    u64 state;

    u64 next() {
        u64 z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

class Rng {
  public:
    explicit Rng(u64 seed) {
        SplitMix64 sm{seed};
        for (auto& w : state_) w = sm.next();
    }

    u64 next() {
        auto rotl = [](u64 x, int k) { return (x << k) | (x >> (64 - k)); };
        u64 result = rotl(state_[1] * 5, 7) * 9;
        u64 t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Unbiased uniform draw from [0, n).
    u64 below(u64 n) {
        require(n > 0, "rng: empty range");
        u64 t = (0 - n) % n;  // 2^64 mod n
        for (;;) {
            u64 x = next();
            if (x >= t) return x % n;
        }
    }

    static u64 derive(u64 seed, u64 index) {
        SplitMix64 sm{seed ^ (0x9E3779B97F4A7C15ULL * (index + 1))};
        return sm.next();
    }

  private:
    std::array<u64, 4> state_;
};

}  // namespace listdec
