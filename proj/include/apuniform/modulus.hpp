#pragma once

#include <cstdint>

namespace apu {

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n) noexcept;

/// A prime modulus n >= 5. Construct through make_modulus.
class Modulus {
 public:
  std::int64_t n() const noexcept { return n_; }

  /// Canonical residue in [0, n).
  std::int64_t reduce(std::int64_t x) const noexcept {
    const std::int64_t r = x % n_;
    return r < 0 ? r + n_ : r;
  }
  std::int64_t reduce(__int128 x) const noexcept {
    const auto r = static_cast<std::int64_t>(x % n_);
    return r < 0 ? r + n_ : r;
  }
  std::int64_t mul(std::int64_t a, std::int64_t b) const noexcept {
    return reduce(static_cast<__int128>(a) * b);
  }
  std::int64_t inverse(std::int64_t a) const;

  friend bool operator==(const Modulus&, const Modulus&) = default;

 private:
  explicit Modulus(std::int64_t n) : n_(n) {}
  friend Modulus make_modulus(std::int64_t n);

  std::int64_t n_;
};

/// Throws Error{TooSmall} for n < 5, Error{NotPrime} for composite n.
Modulus make_modulus(std::int64_t n);

}  // namespace apu
