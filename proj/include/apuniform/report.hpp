#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "apuniform/spectra.hpp"

namespace apu {

inline constexpr const char* kSchemaVersion = "1";

/// One verified claim. The first entry of `measured` is the quantity compared with `bound`
/// under `relation` ("<=" or ">="); further entries are recorded context.
struct CheckRecord {
  std::string name;
  std::string claim_ref;
  std::vector<std::pair<std::string, double>> measured;
  std::optional<double> bound;
  std::string relation = "<=";
  bool passed = false;
  bool skipped = false;
  /// The bound cannot fail at this n, whatever the inputs.
  bool vacuous_at_this_N = false;
  std::string note;
  double runtime_ms = 0.0;

  double value(const std::string& key) const;

  friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

struct VerificationReport {
  std::string schema_version = kSchemaVersion;
  std::int64_t modulus = 0;
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<CheckRecord> checks;

  /// True iff every non-skipped check passed.
  bool all_passed() const noexcept;
  const CheckRecord& check(const std::string& name) const;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Every sampled A must have density in this band.
inline constexpr double kDensityLow = 0.48;
inline constexpr double kDensityHigh = 0.52;

/// Runs the construction end to end at modulus n and checks every step in order:
/// grid design, line census, Freiman map, -72 sum, phase flatness, interval transfer,
/// modulated intervals, G, pattern classes, pattern difference, P, bracket expansion,
/// and `trials` seeded samples of A. Throws Error{NotPrime/TooSmall} before any check;
/// later construction failures mark the dependent checks skipped.
VerificationReport run_verify(std::int64_t n, std::uint64_t seed, int trials);

struct ScalingRow {
  std::int64_t n = 0;
  std::int64_t width = 0;
  double scale = 0.0;              // n^{-1/2} ln n
  double uniformity_G = 0.0;       // max_r |G^(r)|, r = 0 included
  double pattern_difference = 0.0; // |E G-mean - 2 E F-mean|
  double abs_mean_G = 0.0;         // |E_x G(x)|
};

struct ScalingReport {
  std::string schema_version = kSchemaVersion;
  std::vector<ScalingRow> rows;
  std::vector<CheckRecord> checks;
  bool all_passed() const noexcept;
};

/// Normalized ceilings (value / scale) pinned about 3x above the maxima seen over primes 6007..160001.
inline constexpr double kScalingUniformityCeiling = 0.5;
inline constexpr double kScalingDifferenceCeiling = 0.01;
inline constexpr double kScalingMeanCeiling = 0.25;
/// Allowed ratio between consecutive normalized values.
inline constexpr double kScalingRatioLow = 0.1;
inline constexpr double kScalingRatioHigh = 10.0;

ScalingReport run_scaling(std::span<const std::int64_t> n_list);

struct DemoReport {
  std::string schema_version = kSchemaVersion;
  std::int64_t n = 0;
  double c = 0.0;
  double density = 0.0;
  double uniformity = 0.0;
  double ap3_mean = 0.0;
  double ap3_relative_error = 0.0;  // |ap3 / density^3 - 1|
  double ap4_mean = 0.0;
  double ap4_excess_ratio = 0.0;    // ap4 / density^4
  std::vector<CheckRecord> checks;
  bool all_passed() const noexcept;
};

/// Minimum 4-AP mean over density^4 for the level-set check.
inline constexpr double kDemoExcessFloor = 1.1;

DemoReport run_demo_quadratic(std::int64_t n, double c);

std::string report_to_json(const VerificationReport& report);
/// Strict: rejects unknown fields and schema versions other than "1".
VerificationReport report_from_json(const std::string& text);
std::string report_to_json(const ScalingReport& report);
std::string report_to_json(const DemoReport& report);

void save_report(const VerificationReport& report, const std::filesystem::path& path);
VerificationReport load_report(const std::filesystem::path& path);
void save_spectrum_csv(const Spectrum& sp, const std::filesystem::path& path);

}  // namespace apu
