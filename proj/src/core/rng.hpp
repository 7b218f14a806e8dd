#pragma once

#include <cstdint>

#include "core/int128.hpp"

namespace quadfam {

// SplitMix64. Self-contained so that seeded sampling is bit-identical across
// platforms and standard library versions.
class Rng {
  public:
    explicit Rng(u64 seed) : state_(seed) {}

    u64 next() {
        u64 z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n) via 128-bit multiply-shift.
    u64 below(u64 n) {
        return static_cast<u64>((static_cast<unsigned __int128>(next()) * n) >> 64);
    }

    i64 range(i64 lo, i64 hi) {  // inclusive
        return lo + static_cast<i64>(below(static_cast<u64>(hi - lo + 1)));
    }

  private:
    u64 state_;
};

}  // namespace quadfam
