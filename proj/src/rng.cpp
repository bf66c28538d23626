#include "apuniform/rng.hpp"

#include <cmath>

namespace apu {

bool RngStream::bernoulli(double p) noexcept {
  const std::uint64_t word = next_u64();
  if (p >= 1.0) return true;
  if (p <= 0.0) return false;
  // p < 1 so p * 2^64 < 2^64 is exactly representable after ldexp.
  const auto threshold = static_cast<std::uint64_t>(std::ldexp(p, 64));
  return word < threshold;
}

std::uint64_t RngStream::uniform_below(std::uint64_t bound) noexcept {
  const std::uint64_t limit = (0 - bound) % bound;  // 2^64 mod bound
  for (;;) {
    const std::uint64_t word = next_u64();
    const auto wide = static_cast<unsigned __int128>(word) * bound;
    if (static_cast<std::uint64_t>(wide) >= limit) return static_cast<std::uint64_t>(wide >> 64);
  }
}

RngStream RngStream::child(std::uint64_t index) const noexcept {
  RngStream derive(seed_ ^ 0xD1B54A32D192ED03ULL);
  derive.state_ += index * 0x9E3779B97F4A7C15ULL;
  return RngStream(derive.next_u64());
}

}  // namespace apu
