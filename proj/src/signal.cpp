#include "apuniform/signal.hpp"

#include <algorithm>

#include "apuniform/parallel.hpp"

namespace apu {

IntSignalZ::IntSignalZ(std::int64_t offset, std::vector<int> values)
    : offset_(offset), values_(std::move(values)) {
  for (int v : values_) {
    if (v < -4 || v > 4) throw Error(Errc::OutOfDomain, "IntSignalZ values must lie in [-4, 4]");
  }
  const auto first = std::find_if(values_.begin(), values_.end(), [](int v) { return v != 0; });
  if (first == values_.end()) {
    values_.clear();
    offset_ = 0;
    return;
  }
  const auto last = std::find_if(values_.rbegin(), values_.rend(), [](int v) { return v != 0; });
  offset_ += first - values_.begin();
  values_.erase(last.base(), values_.end());
  values_.erase(values_.begin(), first);
}

void validate_interval(const IntervalZn& interval, const Modulus& m) {
  if (interval.length < 1 || interval.length > m.n()) {
    throw Error(Errc::InvalidInterval,
                "interval length " + std::to_string(interval.length) + " outside [1, n]");
  }
}

IntSignal interval_indicator(const Modulus& m, const IntervalZn& interval) {
  const WeightedInterval part{interval, 1};
  return signal_from_weighted_intervals(m, std::span(&part, 1));
}

IntSignal signal_from_weighted_intervals(const Modulus& m,
                                         std::span<const WeightedInterval> parts) {
  IntSignal::Vector values = IntSignal::Vector::Zero(m.n());
  std::vector<bool> covered(static_cast<std::size_t>(m.n()), false);
  for (const auto& part : parts) {
    validate_interval(part.interval, m);
    if (part.weight != 1 && part.weight != -1) {
      throw Error(Errc::InvalidArgument, "interval weight must be +1 or -1");
    }
    for (std::int64_t i = 0; i < part.interval.length; ++i) {
      const std::int64_t x = m.reduce(part.interval.start + i);
      if (covered[x]) {
        throw Error(Errc::OverlappingIntervals,
                    "residue " + std::to_string(x) + " lies in two intervals");
      }
      covered[x] = true;
      values[x] = part.weight;
    }
  }
  return IntSignal(m, std::move(values));
}

IntSignal embed(const Modulus& m, const IntSignalZ& f) {
  IntSignal::Vector values = IntSignal::Vector::Zero(m.n());
  if (!f.empty() && f.support_max() - f.support_min() >= m.n()) {
    throw Error(Errc::InvalidArgument, "support wider than the modulus");
  }
  for (std::int64_t x = f.support_min(); !f.empty() && x <= f.support_max(); ++x) {
    values[m.reduce(x)] = f(x);
  }
  return IntSignal(m, std::move(values));
}

template <typename Scalar>
SignalStats signal_stats(const ZnSignal<Scalar>& s) {
  CompensatedSum sum;
  CompensatedSum squares;
  double lo = 0.0;
  double hi = 0.0;
  for (std::int64_t x = 0; x < s.size(); ++x) {
    const auto v = static_cast<double>(s[x]);
    sum.add(v);
    squares.add(v * v);
    if (x == 0 || v < lo) lo = v;
    if (x == 0 || v > hi) hi = v;
  }
  const auto n = static_cast<double>(s.size());
  return {sum.value() / n, squares.value() / n, lo, hi};
}

template SignalStats signal_stats(const ZnSignal<std::int32_t>&);
template SignalStats signal_stats(const ZnSignal<double>&);

}  // namespace apu
