#pragma once

#include <cstdint>

namespace spinorkit {

// SplitMix64. Every randomized routine takes an explicit seed and uses this
// generator, so output is bit-reproducible across platforms and compilers
// (std::uniform_int_distribution is implementation-defined and never used).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound) by rejection; bound > 0.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (UINT64_MAX / bound);
        for (;;) {
            std::uint64_t v = next_u64();
            if (v < limit) return v % bound;
        }
    }

    // Uniform in [lo, hi] inclusive.
    std::int64_t next_range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // Derive an independent stream; used to seed per-chunk generators so that
    // chunk-parallel runs reproduce the serial sequence assignment.
    Rng fork(std::uint64_t salt) {
        Rng r(state_ ^ (0xd1342543de82ef95ULL * (salt + 1)));
        r.next_u64();
        return r;
    }

  private:
    std::uint64_t state_;
};

}  // namespace spinorkit
