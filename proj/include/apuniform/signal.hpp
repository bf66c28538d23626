#pragma once

#include <Eigen/Core>
#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "apuniform/error.hpp"
#include "apuniform/modulus.hpp"

namespace apu {

/// Dense function on Z_n. Index x in [0, n) holds the value at residue x.
/// Integral Scalar types are "exact": counting kernels use integer arithmetic for them.
template <typename Scalar>
class ZnSignal {
 public:
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  static constexpr bool is_exact = std::is_integral_v<Scalar>;

  explicit ZnSignal(Modulus m) : modulus_(m), values_(Vector::Zero(m.n())) {}

  ZnSignal(Modulus m, Vector values) : modulus_(m), values_(std::move(values)) {
    if (values_.size() != m.n()) {
      throw Error(Errc::LengthMismatch, "signal has " + std::to_string(values_.size()) +
                                            " values for modulus " + std::to_string(m.n()));
    }
  }

  static ZnSignal constant(Modulus m, Scalar value) {
    return ZnSignal(m, Vector::Constant(m.n(), value));
  }

  const Modulus& modulus() const noexcept { return modulus_; }
  std::int64_t size() const noexcept { return modulus_.n(); }
  const Vector& values() const noexcept { return values_; }

  Scalar operator[](std::int64_t x) const { return values_[x]; }
  /// Value at an arbitrary integer, reduced mod n.
  Scalar at(std::int64_t x) const { return values_[modulus_.reduce(x)]; }

  template <typename Other>
  ZnSignal<Other> cast() const {
    return ZnSignal<Other>(modulus_, values_.template cast<Other>());
  }

  /// Residues with a nonzero value, ascending.
  std::vector<std::int64_t> support() const {
    std::vector<std::int64_t> out;
    for (std::int64_t x = 0; x < size(); ++x) {
      if (values_[x] != Scalar(0)) out.push_back(x);
    }
    return out;
  }

 private:
  Modulus modulus_;
  Vector values_;
};

using IntSignal = ZnSignal<std::int32_t>;
using RealSignal = ZnSignal<double>;
using ComplexSignal = ZnSignal<std::complex<double>>;

/// Finitely supported integer function on Z, stored canonically with trimmed zeros.
class IntSignalZ {
 public:
  IntSignalZ() = default;
  IntSignalZ(std::int64_t offset, std::vector<int> values);

  std::int64_t offset() const noexcept { return offset_; }
  const std::vector<int>& values() const noexcept { return values_; }
  bool empty() const noexcept { return values_.empty(); }

  /// Value at any integer; zero off the stored window.
  int operator()(std::int64_t x) const noexcept {
    const std::int64_t i = x - offset_;
    return (i < 0 || i >= static_cast<std::int64_t>(values_.size())) ? 0 : values_[i];
  }

  /// Smallest and largest support points; only meaningful when !empty().
  std::int64_t support_min() const noexcept { return offset_; }
  std::int64_t support_max() const noexcept {
    return offset_ + static_cast<std::int64_t>(values_.size()) - 1;
  }

  friend bool operator==(const IntSignalZ&, const IntSignalZ&) = default;

 private:
  std::int64_t offset_ = 0;
  std::vector<int> values_;
};

/// {start, start+1, ..., start+length-1} mod n. length == n denotes all of Z_n.
struct IntervalZn {
  std::int64_t start = 0;
  std::int64_t length = 1;

  bool contains(std::int64_t x, const Modulus& m) const noexcept {
    return m.reduce(x - start) < length;
  }
};

void validate_interval(const IntervalZn& interval, const Modulus& m);

/// Indicator of an interval.
IntSignal interval_indicator(const Modulus& m, const IntervalZn& interval);

struct WeightedInterval {
  IntervalZn interval;
  int weight = 1;  // +1 or -1
};

/// Sum of weight * indicator over pairwise disjoint intervals.
IntSignal signal_from_weighted_intervals(const Modulus& m, std::span<const WeightedInterval> parts);

/// Places an integer function on Z into Z_n by reducing each support point.
IntSignal embed(const Modulus& m, const IntSignalZ& f);

struct SignalStats {
  double mean = 0.0;
  double l2_mean = 0.0;
  double min = 0.0;
  double max = 0.0;
};

template <typename Scalar>
SignalStats signal_stats(const ZnSignal<Scalar>& s);

/// True when every value is 0 or 1.
template <typename Scalar>
bool is_indicator(const ZnSignal<Scalar>& s) {
  return ((s.values().array() == Scalar(0)) || (s.values().array() == Scalar(1))).all();
}

}  // namespace apu
