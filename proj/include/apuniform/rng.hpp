#pragma once

#include <cstdint>

namespace apu {

/// SplitMix64 (Steele, Lea, Flood 2014). State advances by the golden gamma
/// 0x9E3779B97F4A7C15; output is the state passed through
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   z =  z ^ (z >> 31)
/// Seed 0 yields 0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F.
///
/// Streams are single-consumer. Parallel consumers take child(i), whose seed is
/// the i-th output of a SplitMix64 stream seeded with seed ^ 0xD1B54A32D192ED03.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) noexcept : seed_(seed), state_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }

  std::uint64_t next_u64() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// One 64-bit word per draw; true iff word < p * 2^64. p = 1 always succeeds.
  bool bernoulli(double p) noexcept;

  /// Uniform integer in [0, bound) by rejection; bound > 0.
  std::uint64_t uniform_below(std::uint64_t bound) noexcept;

  RngStream child(std::uint64_t index) const noexcept;

 private:
  std::uint64_t seed_;
  std::uint64_t state_;
};

}  // namespace apu
