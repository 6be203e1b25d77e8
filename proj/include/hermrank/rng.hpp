#pragma once

#include <cstdint>
#include <random>

namespace hermrank {

// Random streams used throughout the library.
//
// Every stream is a std::mt19937_64 (whose output sequence is fixed by the C++
// standard) seeded with a 64-bit value produced by SplitMix64. Sub-streams are
// derived as stream_seed(parent, index) = splitmix64(parent ^ splitmix64(index
// + 1)), so trial i of a simulation with seed s always draws from
// Rng(stream_seed(s, i)) regardless of thread count. Bounded integers are
// drawn by rejection sampling on raw 64-bit outputs, never through the
// implementation-defined std distributions.

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t stream_seed(std::uint64_t parent, std::uint64_t index) noexcept {
  return splitmix64(parent ^ splitmix64(index + 1));
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound); bound must be nonzero.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    for (;;) {
      const std::uint64_t v = engine_();
      if (v < limit) return v % bound;
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace hermrank
