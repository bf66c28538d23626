#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "apuniform/grid.hpp"
#include "apuniform/rng.hpp"
#include "apuniform/signal.hpp"

namespace apu {

inline constexpr std::int64_t kIntervalCount = 300;

/// Interval width t: floor(n / 1200), provided it is positive and at least ceil(n / 1500).
/// Throws Error{ModulusTooSmall} otherwise.
std::int64_t interval_width(const Modulus& m);

/// I_k = {(2k-1)t + 1, ..., 2kt} for k = 1..count, stored at index k - 1.
std::vector<IntervalZn> interval_layout(const Modulus& m, std::int64_t width,
                                        std::int64_t count = kIntervalCount);

/// Number of 4-APs (x, x+d, x+2d, x+3d), d any integer, inside {1..t}: sum_j m_j^2 where
/// m_j counts the elements of {1..t} congruent to j mod 3.
std::int64_t interval_progression_count(std::int64_t width);

/// F = f(k) on I_k, zero elsewhere. The layout must stay below n / 2.
IntSignal build_F(const Modulus& m, const IntSignalZ& f, std::int64_t width);

/// build_F with f = lift_f(grid_g(paper_design())) and t = interval_width(m).
IntSignal build_F(const Modulus& m);

/// G(x) = F(x) (2 cos(2 pi x^2 / n) + 2 cos(6 pi x^2 / n)), i.e. F times the four
/// quadratic phases omega^{+-x^2}, omega^{+-3x^2}.
RealSignal build_G(const IntSignal& F);
RealSignal build_G(const Modulus& m);

/// P = (G + 4) / 8.
RealSignal build_P(const RealSignal& G);
RealSignal build_P(const Modulus& m);

/// Independent Bernoulli(P(x)) draws in coordinate order x = 0..n-1.
/// Throws Error{ProbabilityOutOfRange} if some P(x) lies outside [0, 1].
IntSignal sample_A(const RealSignal& P, RngStream& rng);

/// Indicator of {x : x^2 mod n in [0, cn] or [n - cn, n - 1]}, for c in (0, 1/4).
IntSignal quad_levelset(const Modulus& m, double c);

/// Coefficients of theta(x,d) = p x^2 + q (x+d)^2 + r (x+2d)^2 + s (x+3d)^2 = u x^2 + v xd + w d^2.
struct PatternCoeffs {
  std::array<int, 4> pqrs{};
  int u = 0;
  int v = 0;
  int w = 0;

  static PatternCoeffs from(const std::array<int, 4>& pqrs) noexcept;

  std::int64_t theta(std::int64_t x, std::int64_t d) const noexcept {
    return u * x * x + v * x * d + w * d * d;
  }
  std::int64_t theta_expanded(std::int64_t x, std::int64_t d) const noexcept;

  /// theta(x, d) mod n from residues.
  std::int64_t theta_mod(std::int64_t x, std::int64_t d, const Modulus& m) const noexcept;
};

/// The 256 choices of (p, q, r, s) in {-3, -1, 1, 3}^4, lexicographic.
std::vector<PatternCoeffs> all_patterns();

struct PatternClasses {
  std::vector<PatternCoeffs> u_nonzero;
  std::vector<PatternCoeffs> w_only;  // u = 0, w != 0
  std::vector<PatternCoeffs> null;    // u = w = 0
};

PatternClasses classify_patterns();

struct PatternTerm {
  PatternCoeffs pattern;
  std::complex<double> mean;  // E_{x,d} F(x)F(x+d)F(x+2d)F(x+3d) omega^{theta(x,d)}
};

struct PatternExpansion {
  std::vector<PatternTerm> terms;  // in all_patterns() order
  std::complex<double> total;
};

/// Splits E_{x,d} G(x)G(x+d)G(x+2d)G(x+3d) into its 256 phase patterns, G = build_G(F).
PatternExpansion pattern_expansion(const IntSignal& F);

struct BracketTerm {
  unsigned mask = 0;           // bit i set: G taken from the bracket at x + i d
  double coefficient = 0.0;    // 2^-12 * 4^(4 - popcount)
  double g_mean = 0.0;         // E_{x,d} prod_{i in mask} G(x + i d)
  double contribution = 0.0;   // coefficient * g_mean
};

struct BracketExpansion {
  std::vector<BracketTerm> terms;  // mask 0..15
  double total = 0.0;
};

/// Expands E P(x)P(x+d)P(x+2d)P(x+3d) with P = (G + 4)/8 into the 16 bracket choices.
BracketExpansion bracket_expansion(const RealSignal& G);

}  // namespace apu
