#pragma once

#include <cstdint>
#include <random>

namespace qle {

/// Seeded random source passed explicitly to every stochastic operation.
///
/// Wraps std::mt19937_64, whose output sequence is fixed by the standard.
/// Uniform doubles are built from the top 53 bits directly rather than via
/// std::uniform_real_distribution, whose algorithm is implementation-defined,
/// so transcripts are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed), seed_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Fair coin: true with probability 1/2.
  bool coin() { return (engine_() >> 63) != 0; }

  /// Uniform integer in [0, bound). bound must be nonzero.
  std::uint64_t below(std::uint64_t bound) {
    // Lemire-style rejection keeps the draw unbiased.
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t x = engine_();
      if (x >= threshold) return x % bound;
    }
  }

  std::uint64_t seed() const { return seed_; }

 private:
  std::mt19937_64 engine_;
  std::uint64_t seed_;
};

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Per-trial seed: mix64(mix64(seed) ^ trial_index). Stable across releases;
/// trace files depend on it.
constexpr std::uint64_t derive_trial_seed(std::uint64_t seed,
                                          std::uint64_t trial_index) {
  return mix64(mix64(seed) ^ trial_index);
}

}  // namespace qle
