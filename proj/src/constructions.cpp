#include "apuniform/constructions.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "apuniform/apcount.hpp"
#include "apuniform/parallel.hpp"
#include "apuniform/spectra.hpp"

namespace apu {
namespace {

constexpr std::array<int, 4> kPhaseMultipliers{-3, -1, 1, 3};

}  // namespace

std::int64_t interval_width(const Modulus& m) {
  const std::int64_t n = m.n();
  const std::int64_t t = n / 1200;
  const std::int64_t lower = (n + 1499) / 1500;
  if (t < 1 || t < lower) {
    throw Error(Errc::ModulusTooSmall, "no integer width in [n/1500, n/1200] for n = " +
                                           std::to_string(n));
  }
  return t;
}

std::vector<IntervalZn> interval_layout(const Modulus& m, std::int64_t width, std::int64_t count) {
  if (width < 1 || count < 1) throw Error(Errc::InvalidArgument, "empty interval layout");
  if (4 * width * count > m.n()) {
    throw Error(Errc::ModulusTooSmall, "interval layout reaches past n / 2");
  }
  std::vector<IntervalZn> layout;
  layout.reserve(static_cast<std::size_t>(count));
  for (std::int64_t k = 1; k <= count; ++k) layout.push_back({(2 * k - 1) * width + 1, width});
  return layout;
}

std::int64_t interval_progression_count(std::int64_t width) {
  std::int64_t total = 0;
  for (std::int64_t j = 0; j < 3; ++j) {
    // elements of {1..t} congruent to j mod 3
    const std::int64_t count = j == 0 ? width / 3 : (width >= j ? (width - j) / 3 + 1 : 0);
    total += count * count;
  }
  return total;
}

IntSignal build_F(const Modulus& m, const IntSignalZ& f, std::int64_t width) {
  if (f.empty()) return IntSignal(m);
  if (f.support_min() < 1) throw Error(Errc::InvalidArgument, "f must vanish below 1");
  const auto layout = interval_layout(m, width, f.support_max());
  std::vector<WeightedInterval> parts;
  for (std::int64_t k = f.support_min(); k <= f.support_max(); ++k) {
    const int value = f(k);
    if (value == 0) continue;
    if (value != 1 && value != -1) throw Error(Errc::InvalidArgument, "f must be {-1,0,1} valued");
    parts.push_back({layout[k - 1], value});
  }
  return signal_from_weighted_intervals(m, parts);
}

IntSignal build_F(const Modulus& m) {
  return build_F(m, lift_f(grid_g(paper_design())), interval_width(m));
}

RealSignal build_G(const IntSignal& F) {
  const Modulus& m = F.modulus();
  const auto n = static_cast<double>(m.n());
  RealSignal::Vector values = RealSignal::Vector::Zero(m.n());
  for (std::int64_t x = 0; x < m.n(); ++x) {
    if (F[x] == 0) continue;
    const std::int64_t sq = m.mul(x, x);
    const std::int64_t sq3 = m.mul(3, sq);
    const double phases = 2.0 * std::cos(2.0 * std::numbers::pi * static_cast<double>(sq) / n) +
                          2.0 * std::cos(2.0 * std::numbers::pi * static_cast<double>(sq3) / n);
    values[x] = F[x] * phases;
  }
  return RealSignal(m, std::move(values));
}

RealSignal build_G(const Modulus& m) { return build_G(build_F(m)); }

RealSignal build_P(const RealSignal& G) {
  return RealSignal(G.modulus(), (G.values().array() + 4.0) / 8.0);
}

RealSignal build_P(const Modulus& m) { return build_P(build_G(m)); }

IntSignal sample_A(const RealSignal& P, RngStream& rng) {
  const auto& p = P.values();
  if ((p.array() < 0.0).any() || (p.array() > 1.0).any() || !p.allFinite()) {
    throw Error(Errc::ProbabilityOutOfRange, "P must take values in [0, 1]");
  }
  IntSignal::Vector values(P.size());
  for (std::int64_t x = 0; x < P.size(); ++x) values[x] = rng.bernoulli(p[x]) ? 1 : 0;
  return IntSignal(P.modulus(), std::move(values));
}

IntSignal quad_levelset(const Modulus& m, double c) {
  if (!(c > 0.0 && c < 0.25)) throw Error(Errc::InvalidArgument, "level-set width c must lie in (0, 1/4)");
  const auto n = static_cast<double>(m.n());
  IntSignal::Vector values(m.n());
  for (std::int64_t x = 0; x < m.n(); ++x) {
    const auto sq = static_cast<double>(m.mul(x, x));
    values[x] = (sq <= c * n || sq >= n - c * n) ? 1 : 0;
  }
  return IntSignal(m, std::move(values));
}

PatternCoeffs PatternCoeffs::from(const std::array<int, 4>& pqrs) noexcept {
  const auto [p, q, r, s] = pqrs;
  return {pqrs, p + q + r + s, 2 * (q + 2 * r + 3 * s), q + 4 * r + 9 * s};
}

std::int64_t PatternCoeffs::theta_expanded(std::int64_t x, std::int64_t d) const noexcept {
  std::int64_t total = 0;
  for (int i = 0; i < 4; ++i) total += pqrs[i] * (x + i * d) * (x + i * d);
  return total;
}

std::int64_t PatternCoeffs::theta_mod(std::int64_t x, std::int64_t d, const Modulus& m) const noexcept {
  const __int128 xr = m.reduce(x);
  const __int128 dr = m.reduce(d);
  return m.reduce(static_cast<__int128>(u) * (xr * xr % m.n()) +
                  static_cast<__int128>(v) * (xr * dr % m.n()) +
                  static_cast<__int128>(w) * (dr * dr % m.n()));
}

std::vector<PatternCoeffs> all_patterns() {
  std::vector<PatternCoeffs> out;
  out.reserve(256);
  for (int p : kPhaseMultipliers)
    for (int q : kPhaseMultipliers)
      for (int r : kPhaseMultipliers)
        for (int s : kPhaseMultipliers) out.push_back(PatternCoeffs::from({p, q, r, s}));
  return out;
}

PatternClasses classify_patterns() {
  PatternClasses classes;
  for (const auto& pattern : all_patterns()) {
    if (pattern.u != 0) {
      classes.u_nonzero.push_back(pattern);
    } else if (pattern.w != 0) {
      classes.w_only.push_back(pattern);
    } else {
      classes.null.push_back(pattern);
    }
  }
  return classes;
}

PatternExpansion pattern_expansion(const IntSignal& F) {
  const Modulus& m = F.modulus();
  const std::int64_t n = m.n();
  const auto support = F.support();

  // Pairs (x, d) on which F(x)F(x+d)F(x+2d)F(x+3d) is nonzero, ordered by d then x.
  struct Pair {
    std::int64_t x, d;
    int sign;
  };
  std::vector<std::vector<Pair>> by_d(static_cast<std::size_t>(n));
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t di) {
    const auto d = static_cast<std::int64_t>(di);
    for (std::int64_t x : support) {
      int prod = F[x];
      for (std::int64_t i = 1; i < 4 && prod != 0; ++i) prod *= F.at(x + i * d);
      if (prod != 0) by_d[di].push_back({x, d, prod});
    }
  });

  const auto patterns = all_patterns();
  PatternExpansion out;
  out.terms.reserve(patterns.size());
  const double pairs = static_cast<double>(n) * static_cast<double>(n);
  CompensatedSum total_re;
  CompensatedSum total_im;
  for (const auto& pattern : patterns) {
    CompensatedSum re;
    CompensatedSum im;
    for (const auto& bucket : by_d) {
      for (const auto& pair : bucket) {
        const auto phase = root_of_unity(m, pattern.theta_mod(pair.x, pair.d, m));
        re.add(pair.sign * phase.real());
        im.add(pair.sign * phase.imag());
      }
    }
    const std::complex<double> mean{re.value() / pairs, im.value() / pairs};
    out.terms.push_back({pattern, mean});
    total_re.add(mean.real());
    total_im.add(mean.imag());
  }
  out.total = {total_re.value(), total_im.value()};
  return out;
}

BracketExpansion bracket_expansion(const RealSignal& G) {
  BracketExpansion out;
  CompensatedSum total;
  for (unsigned mask = 0; mask < 16; ++mask) {
    std::vector<int> steps;
    for (int i = 0; i < 4; ++i) {
      if (mask & (1U << i)) steps.push_back(i);
    }
    BracketTerm term;
    term.mask = mask;
    // 2^-12 * 4^(4 - |S|) = 2^(-4 - 2|S|)
    term.coefficient = std::ldexp(1.0, -4 - 2 * std::popcount(mask));
    term.g_mean = progression_pattern_mean(G, std::span<const int>(steps)).value;
    term.contribution = term.coefficient * term.g_mean;
    total.add(term.contribution);
    out.terms.push_back(term);
  }
  out.total = total.value();
  return out;
}

}  // namespace apu
