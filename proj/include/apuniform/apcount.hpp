#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "apuniform/signal.hpp"

namespace apu {

/// Mean of a progression product over all n^2 pairs (x, d), d = 0 included.
struct ApMean {
  double value = 0.0;
  /// Sum over all pairs when every input is integer valued; value == numerator / n^2.
  std::optional<std::int64_t> exact_numerator;
  std::uint64_t pair_count = 0;
};

/// Exact sum over x, d in Z (any sign of d, d = 0 included) of f(x)f(x+d)f(x+2d)f(x+3d).
std::int64_t ap4_sum_z(const IntSignalZ& f);

/// E_{x,d} prod_i signals[i](x + i d) for k = signals.size() in {3, 4, 5}.
/// Throws Error{ModulusMismatch} or Error{InvalidArgument}.
template <typename Scalar>
ApMean apk_mean(std::span<const ZnSignal<Scalar>> signals);

/// apk_mean with the same signal in every slot.
template <typename Scalar>
ApMean apk_mean(const ZnSignal<Scalar>& s, int k);

/// E_{x,d} prod_{i in steps} s(x + i d) for distinct steps in [0, 4]. Empty steps give 1.
template <typename Scalar>
ApMean progression_pattern_mean(const ZnSignal<Scalar>& s, std::span<const int> steps);

/// Element d is E_x s(x)s(x+d)s(x+2d)s(x+3d); the profile averages to the 4-AP mean.
template <typename Scalar>
std::vector<double> ap4_mean_profile(const ZnSignal<Scalar>& s);

/// sum_r |B^(r)|^2 |B^(3r)|^2, the mean of B(x)B(y)B(z)B(w) over solutions of
/// x - 3y + 3z - w = 0. Throws Error{NotIndicator} unless B is 0/1 valued.
double linear_form_mean_fourier(const IntSignal& indicator);

}  // namespace apu
