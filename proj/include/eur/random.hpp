#pragma once

#include <cstdint>

namespace eur {

/// Counter-based generator: the k-th draw for a seed is
/// mix(seed + (k + 1) * 0x9E3779B97F4A7C15) with the SplitMix64 finalizer
/// (shifts 30, 27, 31; multipliers 0xBF58476D1CE4E5B9, 0x94D049BB133111EB).
/// Uniforms take the top 53 bits; normals use Box-Muller on two uniforms and
/// discard the sine branch, so every normal consumes exactly two draws.
class CounterRng {
 public:
  explicit constexpr CounterRng(std::uint64_t seed, std::uint64_t counter = 0) noexcept
      : seed_(seed), counter_(counter) {}

  static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  constexpr std::uint64_t next_u64() noexcept {
    ++counter_;
    return mix(seed_ + counter_ * 0x9E3779B97F4A7C15ULL);
  }

  /// Uniform on [0, 1).
  constexpr double uniform() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Standard normal.
  double normal() noexcept;

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t counter() const noexcept { return counter_; }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_;
};

/// Seed of the independent stream used for item `index` of a run seeded with
/// `seed`, so parallel workers reproduce a serial run.
constexpr std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  return CounterRng::mix(seed ^ CounterRng::mix(index + 0xD1B54A32D192ED03ULL));
}

}  // namespace eur
