#pragma once

#include <cstdint>
#include <random>

namespace lzc {

// Reproducible random source. The engine is std::mt19937_64 (its output
// sequence is fixed by the C++ standard) seeded directly with the 64-bit
// seed. Bounded integers and unit reals are derived here rather than through
// std::*_distribution, whose algorithms vary between standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform integer in [0, bound); bound must be > 0. Rejection sampling
  // removes modulo bias.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t x = engine_();
      if (x >= threshold) return x % bound;
    }
  }

  // Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace lzc
