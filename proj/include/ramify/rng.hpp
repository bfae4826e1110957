/// Deterministic RNG. The library never reads ambient randomness; every
/// randomized routine takes an explicit seed so runs are bit-reproducible.
#pragma once

#include <cstdint>

namespace ramify {

// splitmix64: identical stream on every platform.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform-ish draw in [0, n). Modulo bias is irrelevant here; what
    /// matters is the fixed stream.
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

  private:
    std::uint64_t state_;
};

}  // namespace ramify
