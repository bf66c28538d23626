#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <vector>

#include "apuniform/apuniform.hpp"

using namespace apu;

namespace {

template <typename F>
Errc error_code(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no apu::Error thrown";
  return Errc::InvalidArgument;
}

}  // namespace

// -----------------------------------------------------------------------------
// Modulus
// -----------------------------------------------------------------------------

TEST(Modulus, AgreesWithSieveUpTo1e5) {
  constexpr int kLimit = 100000;
  std::vector<bool> composite(kLimit + 1, false);
  composite[0] = composite[1] = true;
  for (int i = 2; i * i <= kLimit; ++i) {
    if (composite[i]) continue;
    for (int j = i * i; j <= kLimit; j += i) composite[j] = true;
  }
  for (int n = 0; n <= kLimit; ++n) {
    ASSERT_EQ(is_prime(n), !composite[n]) << n;
    if (n >= 5) {
      bool accepted = true;
      try {
        make_modulus(n);
      } catch (const Error&) {
        accepted = false;
      }
      ASSERT_EQ(accepted, !composite[n]) << n;
    }
  }
}

TEST(Modulus, Examples) {
  EXPECT_EQ(make_modulus(10007).n(), 10007);
  EXPECT_EQ(make_modulus(5).n(), 5);
  EXPECT_EQ(error_code([] { make_modulus(10); }), Errc::NotPrime);
  EXPECT_EQ(error_code([] { make_modulus(3); }), Errc::TooSmall);
  EXPECT_EQ(error_code([] { make_modulus(-7); }), Errc::TooSmall);
}

TEST(Modulus, LargePrimesAndPseudoprimes) {
  EXPECT_TRUE(is_prime(18446744073709551557ULL));
  EXPECT_FALSE(is_prime(3215031751ULL));   // strong pseudoprime to bases 2, 3, 5, 7
  EXPECT_FALSE(is_prime(3825123056546413051ULL));
  EXPECT_TRUE(is_prime(1000000007ULL));
}

TEST(Modulus, ReduceAndInverse) {
  const Modulus m = make_modulus(101);
  EXPECT_EQ(m.reduce(std::int64_t{-1}), 100);
  EXPECT_EQ(m.reduce(std::int64_t{202}), 0);
  for (std::int64_t a = 1; a < 101; ++a) EXPECT_EQ(m.mul(a, m.inverse(a)), 1);
  EXPECT_EQ(error_code([&] { m.inverse(202); }), Errc::InvalidArgument);
}

// -----------------------------------------------------------------------------
// RngStream
// -----------------------------------------------------------------------------

TEST(Rng, SplitMixVectors) {
  RngStream r(0);
  EXPECT_EQ(r.next_u64(), 0xE220A8397B1DCDAFULL);
  EXPECT_EQ(r.next_u64(), 0x6E789E6AA1B965F4ULL);
  EXPECT_EQ(r.next_u64(), 0x06C45D188009454FULL);
}

TEST(Rng, BernoulliEndpoints) {
  RngStream r(7);
  for (int i = 0; i < 1000; ++i) {
    EXPECT_TRUE(r.bernoulli(1.0));
    EXPECT_FALSE(r.bernoulli(0.0));
  }
}

TEST(Rng, BernoulliFrequency) {
  RngStream r(11);
  int hits = 0;
  for (int i = 0; i < 100000; ++i) hits += r.bernoulli(0.3);
  EXPECT_NEAR(hits / 100000.0, 0.3, 0.01);
}

TEST(Rng, UniformBelowStaysInRange) {
  RngStream r(3);
  std::vector<int> seen(7, 0);
  for (int i = 0; i < 7000; ++i) {
    const auto v = r.uniform_below(7);
    ASSERT_LT(v, 7u);
    ++seen[v];
  }
  for (int c : seen) EXPECT_GT(c, 800);
}

TEST(Rng, ChildrenAreDeterministicAndDistinct) {
  const RngStream parent(42);
  RngStream a = parent.child(5);
  RngStream b = parent.child(5);
  RngStream c = parent.child(6);
  EXPECT_EQ(a.seed(), b.seed());
  EXPECT_NE(a.seed(), c.seed());
  for (int i = 0; i < 10; ++i) EXPECT_EQ(a.next_u64(), b.next_u64());
}

// -----------------------------------------------------------------------------
// Signals
// -----------------------------------------------------------------------------

TEST(Signal, WeightedIntervals) {
  const Modulus m = make_modulus(11);
  const std::vector<WeightedInterval> one{{{2, 3}, 1}};
  const IntSignal s = signal_from_weighted_intervals(m, one);
  const std::vector<int> expect{0, 0, 1, 1, 1, 0, 0, 0, 0, 0, 0};
  for (int x = 0; x < 11; ++x) EXPECT_EQ(s[x], expect[x]);

  const std::vector<WeightedInterval> overlap{{{2, 2}, 1}, {{3, 2}, -1}};
  EXPECT_EQ(error_code([&] { signal_from_weighted_intervals(m, overlap); }),
            Errc::OverlappingIntervals);

  const std::vector<WeightedInterval> wrap{{{9, 3}, 1}};
  const IntSignal w = signal_from_weighted_intervals(m, wrap);
  EXPECT_EQ(w.support(), (std::vector<std::int64_t>{0, 9, 10}));

  const std::vector<WeightedInterval> bad_weight{{{0, 2}, 2}};
  EXPECT_EQ(error_code([&] { signal_from_weighted_intervals(m, bad_weight); }), Errc::InvalidArgument);
}

TEST(Signal, IntervalValidation) {
  const Modulus m = make_modulus(11);
  EXPECT_NO_THROW(validate_interval({3, 11}, m));
  EXPECT_EQ(error_code([&] { validate_interval({0, 0}, m); }), Errc::InvalidInterval);
  EXPECT_EQ(error_code([&] { validate_interval({0, 12}, m); }), Errc::InvalidInterval);
  EXPECT_EQ(interval_indicator(m, {0, 11}).support().size(), 11u);
}

TEST(Signal, LengthMismatch) {
  const Modulus m = make_modulus(11);
  EXPECT_EQ(error_code([&] { IntSignal(m, IntSignal::Vector::Zero(10)); }), Errc::LengthMismatch);
}

TEST(Signal, Stats) {
  const Modulus m = make_modulus(11);
  const auto one = signal_stats(IntSignal::constant(m, 1));
  EXPECT_DOUBLE_EQ(one.mean, 1.0);
  EXPECT_DOUBLE_EQ(one.l2_mean, 1.0);
  const auto zero = signal_stats(IntSignal(m));
  EXPECT_EQ(zero.mean, 0.0);
  EXPECT_EQ(zero.l2_mean, 0.0);
  EXPECT_EQ(zero.min, 0.0);
  EXPECT_EQ(zero.max, 0.0);
}

TEST(Signal, IntSignalZTrimsAndEmbeds) {
  const IntSignalZ f(3, {0, 0, 1, -1, 0});
  EXPECT_EQ(f.support_min(), 5);
  EXPECT_EQ(f.support_max(), 6);
  EXPECT_EQ(f(5), 1);
  EXPECT_EQ(f(6), -1);
  EXPECT_EQ(f(100), 0);
  EXPECT_TRUE(IntSignalZ(0, {0, 0}).empty());
  EXPECT_EQ(error_code([] { IntSignalZ(0, {5}); }), Errc::OutOfDomain);

  const Modulus m = make_modulus(5);
  const IntSignal e = embed(m, IntSignalZ(-1, {1, 0, -1}));
  EXPECT_EQ(e[4], 1);
  EXPECT_EQ(e[1], -1);
}

// -----------------------------------------------------------------------------
// Signal files
// -----------------------------------------------------------------------------

TEST(SignalIo, RoundTrip) {
  const Modulus m = make_modulus(13);
  IntSignal::Vector v(13);
  for (int i = 0; i < 13; ++i) v[i] = (i % 3) - 1;
  const IntSignal s(m, v);
  const auto loaded = signal_from_json(signal_to_json(s));
  ASSERT_TRUE(std::holds_alternative<IntSignal>(loaded));
  EXPECT_EQ(std::get<IntSignal>(loaded).values(), s.values());

  RealSignal::Vector r(13);
  for (int i = 0; i < 13; ++i) r[i] = std::sqrt(i + 0.5);
  const RealSignal rs(m, r);
  const auto back = signal_from_json(signal_to_json(rs));
  ASSERT_TRUE(std::holds_alternative<RealSignal>(back));
  EXPECT_EQ(std::get<RealSignal>(back).values(), rs.values());
}

TEST(SignalIo, RejectsBadDocuments) {
  EXPECT_EQ(error_code([] { signal_from_json("{\"n\": 5, \"values\": [0,0,0,0]}"); }),
            Errc::LengthMismatch);
  EXPECT_EQ(error_code([] { signal_from_json("{\"n\": 9, \"values\": [0,0,0,0,0,0,0,0,0]}"); }),
            Errc::NotPrime);
  EXPECT_EQ(error_code([] { signal_from_json("{\"n\": 5, \"values\": [0,0,0,0,0], \"x\": 1}"); }),
            Errc::ParseError);
  EXPECT_EQ(error_code([] { signal_from_json("not json"); }), Errc::ParseError);
}

TEST(SignalIo, MissingFile) {
  EXPECT_EQ(error_code([] { load_signal("/nonexistent/dir/signal.json"); }), Errc::IoFailure);
  EXPECT_EQ(error_code([] { write_text_file("/nonexistent/dir/out.json", "x"); }), Errc::IoFailure);
}

TEST(SignalIo, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "apuniform_signal_roundtrip.json";
  const IntSignal s = interval_indicator(make_modulus(17), {4, 6});
  save_signal(s, path);
  const auto loaded = load_signal(path);
  EXPECT_EQ(std::get<IntSignal>(loaded).values(), s.values());
  std::filesystem::remove(path);
}

// -----------------------------------------------------------------------------
// Parallel helpers
// -----------------------------------------------------------------------------

TEST(Parallel, CompensatedSumRecoversSmallTerms) {
  CompensatedSum sum;
  sum.add(1e16);
  for (int i = 0; i < 1000; ++i) sum.add(1.0);
  sum.add(-1e16);
  EXPECT_EQ(sum.value(), 1000.0);
}

TEST(Parallel, ParallelForVisitsEveryIndexOnce) {
  set_thread_count(4);
  std::vector<int> hits(1000, 0);
  parallel_for(hits.size(), [&](std::size_t i) { hits[i] += 1; });
  set_thread_count(1);
  for (int h : hits) EXPECT_EQ(h, 1);
}
