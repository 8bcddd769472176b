#pragma once

#include <cstdint>
#include <limits>

namespace sebp {

/// SplitMix64 finalizer. Used to derive independent per-realization seeds.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Seed of the stream that drives realization `index` of a run seeded with `base_seed`.
constexpr std::uint64_t stream_seed(std::uint64_t base_seed, std::uint64_t index) noexcept {
  return mix64(mix64(base_seed) ^ (index + 0x9e3779b97f4a7c15ULL));
}

/// Small counter-based generator (SplitMix64). Satisfies UniformRandomBitGenerator,
/// so it plugs into the <random> distributions.
class Stream {
 public:
  using result_type = std::uint64_t;

  explicit constexpr Stream(std::uint64_t seed) noexcept : state_(seed) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  constexpr result_type operator()() noexcept {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix64(state_);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  constexpr double uniform() noexcept {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

}  // namespace sebp
