#include "apuniform/modulus.hpp"

#include <array>
#include <string>

#include "apuniform/error.hpp"

namespace apu {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

}  // namespace

bool is_prime(u64 n) noexcept {
  if (n < 2) return false;
  constexpr std::array<u64, 12> kSmall{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 p : kSmall) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // These twelve bases are a deterministic witness set below 3.3e24.
  for (u64 a : kSmall) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::int64_t Modulus::inverse(std::int64_t a) const {
  const std::int64_t r = reduce(a);
  if (r == 0) throw Error(Errc::InvalidArgument, "0 has no inverse mod " + std::to_string(n_));
  return static_cast<std::int64_t>(pow_mod(static_cast<u64>(r), static_cast<u64>(n_ - 2),
                                           static_cast<u64>(n_)));
}

Modulus make_modulus(std::int64_t n) {
  if (n < 5) throw Error(Errc::TooSmall, "modulus " + std::to_string(n) + " is below 5");
  if (!is_prime(static_cast<u64>(n))) {
    throw Error(Errc::NotPrime, "modulus " + std::to_string(n) + " is composite");
  }
  return Modulus(n);
}

}  // namespace apu
