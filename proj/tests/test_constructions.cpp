#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <set>

#include "apuniform/apuniform.hpp"

using namespace apu;

namespace {

Errc error_code(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no apu::Error thrown";
  return Errc::InvalidArgument;
}

}  // namespace

TEST(Width, Gate) {
  EXPECT_EQ(interval_width(make_modulus(10007)), 8);
  EXPECT_EQ(interval_width(make_modulus(6007)), 5);
  EXPECT_EQ(interval_width(make_modulus(5003)), 4);
  EXPECT_EQ(interval_width(make_modulus(4999)), 4);
  EXPECT_EQ(error_code([] { interval_width(make_modulus(2399)); }), Errc::ModulusTooSmall);
  EXPECT_EQ(error_code([] { interval_width(make_modulus(1009)); }), Errc::ModulusTooSmall);
  EXPECT_EQ(error_code([] { build_F(make_modulus(1193)); }), Errc::ModulusTooSmall);
}

TEST(Layout, IntervalsAreDisjointAndBelowHalf) {
  const Modulus m = make_modulus(10007);
  const auto layout = interval_layout(m, 8);
  ASSERT_EQ(layout.size(), 300u);
  EXPECT_EQ(layout[0].start, 9);
  EXPECT_EQ(layout[0].length, 8);
  EXPECT_EQ(layout[299].start + layout[299].length - 1, 4800);
  for (std::size_t k = 1; k < layout.size(); ++k) {
    EXPECT_EQ(layout[k].start - layout[k - 1].start, 16);
  }
  EXPECT_THROW(interval_layout(m, 9), Error);
}

TEST(F, SupportAndValues) {
  const Modulus m = make_modulus(10007);
  const IntSignal F = build_F(m);
  const IntSignalZ f = lift_f(grid_g(paper_design()));
  const auto layout = interval_layout(m, 8);
  EXPECT_EQ(F.support().size(), 64u * 8u);
  for (std::int64_t k = 1; k <= 300; ++k) {
    for (std::int64_t i = 0; i < 8; ++i) ASSERT_EQ(F[layout[k - 1].start + i], f(k));
  }
}

TEST(G, Values) {
  const Modulus m = make_modulus(10007);
  const IntSignal F = build_F(m);
  const RealSignal G = build_G(F);
  const auto stats = signal_stats(G);
  EXPECT_GE(stats.min, -4.0);
  EXPECT_LE(stats.max, 4.0);
  for (std::int64_t x = 0; x < m.n(); ++x) {
    if (F[x] == 0) {
      ASSERT_EQ(G[x], 0.0);
      continue;
    }
    std::complex<double> phases = 0.0;
    for (std::int64_t a : {1, -1, 3, -3}) phases += root_of_unity(m, m.mul(a, m.mul(x, x)));
    ASSERT_NEAR(G[x], F[x] * phases.real(), 1e-12);
    ASSERT_NEAR(phases.imag(), 0.0, 1e-12);
  }
}

TEST(G, UniformityRegression) {
  // Pinned from the first run; a 1.5x margin absorbs rounding differences only.
  const double u = max_coefficient(dft(build_G(make_modulus(10007))));
  EXPECT_GT(u, 0.0);
  EXPECT_LE(u, 1.5 * 0.012294);
}

TEST(P, RangeAndShift) {
  const Modulus m = make_modulus(10007);
  const RealSignal G = build_G(m);
  const RealSignal P = build_P(G);
  const auto stats = signal_stats(P);
  EXPECT_GE(stats.min, 0.0);
  EXPECT_LE(stats.max, 1.0);
  const Spectrum sg = dft(G);
  const Spectrum sp = dft(P);
  for (std::int64_t r = 1; r < m.n(); ++r) ASSERT_NEAR(std::abs(sp[r] - sg[r] / 8.0), 0.0, 1e-12);
  EXPECT_NEAR(sp[0].real(), 0.5 + sg[0].real() / 8.0, 1e-12);
}

TEST(P, Endpoints) {
  const Modulus m = make_modulus(11);
  RealSignal::Vector g = RealSignal::Vector::Zero(11);
  g[1] = 4.0;
  g[2] = -4.0;
  const RealSignal P = build_P(RealSignal(m, g));
  EXPECT_EQ(P[0], 0.5);
  EXPECT_EQ(P[1], 1.0);
  EXPECT_EQ(P[2], 0.0);
}

TEST(Sample, DegenerateProbabilities) {
  const Modulus m = make_modulus(101);
  RngStream rng(1);
  EXPECT_EQ(sample_A(RealSignal::constant(m, 1.0), rng).support().size(), 101u);
  EXPECT_TRUE(sample_A(RealSignal::constant(m, 0.0), rng).support().empty());
  EXPECT_EQ(error_code([&] { sample_A(RealSignal::constant(m, 1.5), rng); }), Errc::ProbabilityOutOfRange);
}

TEST(Sample, DeterministicPerSeed) {
  const RealSignal P = build_P(make_modulus(10007));
  RngStream a(42);
  RngStream b(42);
  RngStream c(43);
  const IntSignal A1 = sample_A(P, a);
  EXPECT_EQ(A1.values(), sample_A(P, b).values());
  EXPECT_NE(A1.values(), sample_A(P, c).values());
  EXPECT_TRUE(is_indicator(A1));
}

TEST(Sample, ConcentratesAroundP) {
  const Modulus m = make_modulus(10007);
  const RealSignal P = build_P(m);
  const Spectrum sp = dft(P);
  const RngStream root(42);
  int failures = 0;
  for (int trial = 0; trial < 20; ++trial) {
    RngStream rng = root.child(trial);
    const IntSignal A = sample_A(P, rng);
    const double density = signal_stats(A).mean;
    EXPECT_GE(density, 0.48);
    EXPECT_LE(density, 0.52);
    const double gap = (dft(A).coeffs() - sp.coeffs()).cwiseAbs().maxCoeff();
    failures += gap > log_scale(m);
  }
  EXPECT_LE(failures, 1);
}

TEST(LevelSet, Membership) {
  const Modulus m = make_modulus(101);
  const IntSignal A = quad_levelset(m, 0.1);
  for (std::int64_t x = 0; x < 101; ++x) {
    const std::int64_t sq = m.mul(x, x);
    const bool in = sq <= 0.1 * 101 || sq >= 101 - 0.1 * 101;
    EXPECT_EQ(A[x], in ? 1 : 0) << x;
  }
  EXPECT_THROW(quad_levelset(m, 0.0), Error);
  EXPECT_THROW(quad_levelset(m, 0.25), Error);
}

TEST(LevelSet, NearFullSetBehavesRandomly) {
  const Modulus m = make_modulus(10007);
  const IntSignal A = quad_levelset(m, 0.24);
  const double density = signal_stats(A).mean;
  EXPECT_NEAR(density, 0.48, 0.01);
  EXPECT_NEAR(apk_mean(A, 3).value / std::pow(density, 3), 1.0, 0.1);
  EXPECT_NEAR(apk_mean(A, 4).value / std::pow(density, 4), 1.0, 0.1);
}

TEST(Patterns, Classification) {
  const auto all = all_patterns();
  ASSERT_EQ(all.size(), 256u);
  EXPECT_EQ(all.front().pqrs, (std::array<int, 4>{-3, -3, -3, -3}));
  const auto classes = classify_patterns();
  EXPECT_EQ(classes.u_nonzero.size() + classes.w_only.size() + classes.null.size(), 256u);
  ASSERT_EQ(classes.null.size(), 2u);
  std::set<std::array<int, 4>> nulls{classes.null[0].pqrs, classes.null[1].pqrs};
  EXPECT_TRUE(nulls.count({1, -3, 3, -1}));
  EXPECT_TRUE(nulls.count({-1, 3, -3, 1}));
  for (const auto& p : classes.null) EXPECT_EQ(p.v, 0);
  for (const auto& p : classes.w_only) {
    EXPECT_EQ(p.u, 0);
    EXPECT_NE(p.w, 0);
  }
}

TEST(Patterns, Coefficients) {
  const auto z = PatternCoeffs::from({1, -3, 3, -1});
  EXPECT_EQ(z.u, 0);
  EXPECT_EQ(z.v, 0);
  EXPECT_EQ(z.w, 0);
  const auto t = PatternCoeffs::from({3, 3, 3, 3});
  EXPECT_EQ(t.u, 12);
  EXPECT_EQ(t.v, 36);
  EXPECT_EQ(t.w, 42);
}

TEST(Patterns, ThetaIdentity) {
  const Modulus m = make_modulus(10007);
  for (const auto& p : all_patterns()) {
    for (std::int64_t x = -7; x <= 7; ++x) {
      for (std::int64_t d = -7; d <= 7; ++d) {
        ASSERT_EQ(p.theta(x, d), p.theta_expanded(x, d));
        ASSERT_EQ(p.theta_mod(m.reduce(x * 1001), m.reduce(d * 977), m),
                  m.reduce(p.theta(x * 1001, d * 977)));
      }
    }
  }
  // (x + 3d)^2 = x^2 - 3(x + d)^2 + 3(x + 2d)^2.
  for (std::int64_t x = -20; x <= 20; ++x)
    for (std::int64_t d = -20; d <= 20; ++d)
      ASSERT_EQ((x + 3 * d) * (x + 3 * d), x * x - 3 * (x + d) * (x + d) + 3 * (x + 2 * d) * (x + 2 * d));
}

TEST(Expansion, PatternsReproduceDirectMean) {
  // f sits on [73, 292], below n / 2, so F can be f itself.
  const Modulus m = make_modulus(1009);
  const IntSignal F = embed(m, lift_f(grid_g(paper_design())));
  const RealSignal G = build_G(F);
  const PatternExpansion ex = pattern_expansion(F);
  ASSERT_EQ(ex.terms.size(), 256u);
  const double direct = apk_mean(G, 4).value;
  EXPECT_NEAR(ex.total.real(), direct, 1e-6);
  EXPECT_NEAR(ex.total.imag(), 0.0, 1e-6);
  const double f_mean = apk_mean(F, 4).value;
  for (const auto& term : ex.terms) {
    if (term.pattern.u == 0 && term.pattern.w == 0) EXPECT_NEAR(term.mean.real(), f_mean, 1e-12);
  }
}

TEST(Expansion, BracketTerms) {
  const Modulus m = make_modulus(10007);
  const RealSignal G = build_G(m);
  const BracketExpansion ex = bracket_expansion(G);
  ASSERT_EQ(ex.terms.size(), 16u);
  EXPECT_EQ(ex.terms[0].contribution, 1.0 / 16.0);
  EXPECT_EQ(ex.terms[15].contribution, std::ldexp(apk_mean(G, 4).value, -12));
  for (const auto& t : ex.terms) {
    EXPECT_EQ(t.coefficient, std::ldexp(1.0, -4 - 2 * std::popcount(t.mask)));
  }
  EXPECT_NEAR(ex.total, apk_mean(build_P(G), 4).value, 1e-10);
}
