#include "apuniform/apcount.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <string>

#include "apuniform/parallel.hpp"
#include "apuniform/spectra.hpp"

namespace apu {
namespace {

template <typename Scalar>
struct Factor {
  const ZnSignal<Scalar>* signal;
  std::int64_t step;
};

/// Per-d sums of prod_j factor_j(x + step_j d). Each d is summed by walking the support of
/// the sparsest factor in ascending order; sums are indexed by d so the combination order
/// never depends on scheduling.
template <typename Scalar>
struct KernelOutput {
  std::vector<double> real_by_d;
  std::vector<std::int64_t> exact_by_d;
};

template <typename Scalar>
KernelOutput<Scalar> progression_kernel(const std::vector<Factor<Scalar>>& factors) {
  const Modulus& m = factors.front().signal->modulus();
  const std::int64_t n = m.n();

  std::size_t pivot = 0;
  std::vector<std::int64_t> pivot_support = factors[0].signal->support();
  for (std::size_t j = 1; j < factors.size(); ++j) {
    auto support = factors[j].signal->support();
    if (support.size() < pivot_support.size()) {
      pivot = j;
      pivot_support = std::move(support);
    }
  }

  KernelOutput<Scalar> out;
  if constexpr (ZnSignal<Scalar>::is_exact) {
    out.exact_by_d.assign(static_cast<std::size_t>(n), 0);
  } else {
    out.real_by_d.assign(static_cast<std::size_t>(n), 0.0);
  }

  parallel_for(static_cast<std::size_t>(n), [&](std::size_t di) {
    const auto d = static_cast<std::int64_t>(di);
    // Factor j is read at y + (step_j - step_pivot) d where y runs over the pivot support.
    std::array<std::int64_t, 5> shift{};
    std::array<const Scalar*, 5> data{};
    for (std::size_t j = 0; j < factors.size(); ++j) {
      shift[j] = m.mul(factors[j].step - factors[pivot].step, d);
      data[j] = factors[j].signal->values().data();
    }
    if constexpr (ZnSignal<Scalar>::is_exact) {
      std::int64_t acc = 0;
      for (std::int64_t y : pivot_support) {
        std::int64_t prod = 1;
        for (std::size_t j = 0; j < factors.size() && prod != 0; ++j) {
          std::int64_t idx = y + shift[j];
          if (idx >= n) idx -= n;
          prod *= data[j][idx];
        }
        acc += prod;
      }
      out.exact_by_d[di] = acc;
    } else {
      CompensatedSum acc;
      for (std::int64_t y : pivot_support) {
        double prod = 1.0;
        for (std::size_t j = 0; j < factors.size(); ++j) {
          std::int64_t idx = y + shift[j];
          if (idx >= n) idx -= n;
          prod *= data[j][idx];
        }
        if (prod != 0.0) acc.add(prod);
      }
      out.real_by_d[di] = acc.value();
    }
  });
  return out;
}

template <typename Scalar>
ApMean reduce_output(const KernelOutput<Scalar>& out, std::int64_t n) {
  ApMean result;
  result.pair_count = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
  const double pairs = static_cast<double>(n) * static_cast<double>(n);
  if constexpr (ZnSignal<Scalar>::is_exact) {
    __int128 total = 0;
    for (std::int64_t v : out.exact_by_d) total += v;
    if (total > std::numeric_limits<std::int64_t>::max() ||
        total < std::numeric_limits<std::int64_t>::min()) {
      throw Error(Errc::TooLarge, "progression sum exceeds 64 bits");
    }
    result.exact_numerator = static_cast<std::int64_t>(total);
    result.value = static_cast<double>(*result.exact_numerator) / pairs;
  } else {
    CompensatedSum total;
    for (double v : out.real_by_d) total.add(v);
    result.value = total.value() / pairs;
  }
  return result;
}

template <typename Scalar>
std::vector<Factor<Scalar>> same_signal_factors(const ZnSignal<Scalar>& s,
                                                std::span<const int> steps) {
  std::vector<Factor<Scalar>> factors;
  for (int step : steps) {
    if (step < 0 || step > 4) throw Error(Errc::InvalidArgument, "progression step outside [0, 4]");
    if (std::count(steps.begin(), steps.end(), step) != 1) {
      throw Error(Errc::InvalidArgument, "progression steps must be distinct");
    }
    factors.push_back({&s, step});
  }
  return factors;
}

}  // namespace

std::int64_t ap4_sum_z(const IntSignalZ& f) {
  if (f.empty()) return 0;
  const std::int64_t lo = f.support_min();
  const std::int64_t hi = f.support_max();
  const std::int64_t reach = (hi - lo) / 3;
  std::int64_t total = 0;
  for (std::int64_t d = -reach; d <= reach; ++d) {
    // x and x + 3d must both lie in [lo, hi].
    const std::int64_t x_lo = std::max(lo, lo - 3 * d);
    const std::int64_t x_hi = std::min(hi, hi - 3 * d);
    for (std::int64_t x = x_lo; x <= x_hi; ++x) {
      total += static_cast<std::int64_t>(f(x)) * f(x + d) * f(x + 2 * d) * f(x + 3 * d);
    }
  }
  return total;
}

template <typename Scalar>
ApMean apk_mean(std::span<const ZnSignal<Scalar>> signals) {
  if (signals.size() < 3 || signals.size() > 5) {
    throw Error(Errc::InvalidArgument,
                "progression length " + std::to_string(signals.size()) + " not in {3,4,5}");
  }
  std::vector<Factor<Scalar>> factors;
  for (std::size_t i = 0; i < signals.size(); ++i) {
    if (!(signals[i].modulus() == signals[0].modulus())) {
      throw Error(Errc::ModulusMismatch, "signals live on different moduli");
    }
    factors.push_back({&signals[i], static_cast<std::int64_t>(i)});
  }
  return reduce_output(progression_kernel(factors), signals[0].size());
}

template <typename Scalar>
ApMean apk_mean(const ZnSignal<Scalar>& s, int k) {
  if (k < 3 || k > 5) {
    throw Error(Errc::InvalidArgument, "progression length " + std::to_string(k) + " not in {3,4,5}");
  }
  std::vector<int> steps(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) steps[i] = i;
  return progression_pattern_mean(s, std::span<const int>(steps));
}

template <typename Scalar>
ApMean progression_pattern_mean(const ZnSignal<Scalar>& s, std::span<const int> steps) {
  const std::int64_t n = s.size();
  if (steps.empty()) {
    ApMean one;
    one.pair_count = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
    one.value = 1.0;
    if constexpr (ZnSignal<Scalar>::is_exact) one.exact_numerator = n * n;
    return one;
  }
  return reduce_output(progression_kernel(same_signal_factors(s, steps)), n);
}

template <typename Scalar>
std::vector<double> ap4_mean_profile(const ZnSignal<Scalar>& s) {
  constexpr std::array<int, 4> kSteps{0, 1, 2, 3};
  const auto out = progression_kernel(same_signal_factors(s, std::span<const int>(kSteps)));
  const auto n = static_cast<double>(s.size());
  std::vector<double> profile(static_cast<std::size_t>(s.size()));
  for (std::size_t d = 0; d < profile.size(); ++d) {
    if constexpr (ZnSignal<Scalar>::is_exact) {
      profile[d] = static_cast<double>(out.exact_by_d[d]) / n;
    } else {
      profile[d] = out.real_by_d[d] / n;
    }
  }
  return profile;
}

double linear_form_mean_fourier(const IntSignal& indicator) {
  if (!is_indicator(indicator)) throw Error(Errc::NotIndicator, "expected a 0/1 signal");
  const Spectrum sp = dft(indicator);
  const Modulus& m = sp.modulus();
  CompensatedSum total;
  for (std::int64_t r = 0; r < m.n(); ++r) {
    total.add(std::norm(sp.coeffs()[r]) * std::norm(sp.coeffs()[m.mul(3, r)]));
  }
  return total.value();
}

template ApMean apk_mean(std::span<const IntSignal>);
template ApMean apk_mean(std::span<const RealSignal>);
template ApMean apk_mean(const IntSignal&, int);
template ApMean apk_mean(const RealSignal&, int);
template ApMean progression_pattern_mean(const IntSignal&, std::span<const int>);
template ApMean progression_pattern_mean(const RealSignal&, std::span<const int>);
template std::vector<double> ap4_mean_profile(const IntSignal&);
template std::vector<double> ap4_mean_profile(const RealSignal&);

}  // namespace apu
