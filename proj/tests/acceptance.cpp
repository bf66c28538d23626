// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "apuniform/apuniform.hpp"

using namespace apu;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double budget_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = elapsed < budget_s;
  const bool ok = out.passed && in_time;
  if (!ok) ++failures;
  std::printf("%s %2d %s: %s [%.2fs, budget %.0fs%s]\n", ok ? "PASS" : "FAIL", id, title,
              out.detail.c_str(), elapsed, budget_s, in_time ? "" : ", over budget");
  std::fflush(stdout);
}

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

}  // namespace

int main() {
  criterion(1, "grid lift sums to -72", 1.0, [] {
    const std::int64_t sum = ap4_sum_z(lift_f(grid_g(paper_design())));
    return Outcome{sum == -72, fmt("sum=%lld", static_cast<long long>(sum))};
  });

  criterion(2, "line census 48/24/4 and design validity", 1.0, [] {
    int counts[3] = {0, 0, 0};
    const auto lines = enumerate_lines();
    for (const auto& l : lines) ++counts[static_cast<int>(l.kind)];
    const bool valid = validate_design(paper_design()).valid;
    return Outcome{lines.size() == 76 && counts[0] == 48 && counts[1] == 24 && counts[2] == 4 && valid,
                   fmt("lines=%zu axis=%d plane=%d main=%d valid=%d", lines.size(), counts[0], counts[1],
                       counts[2], valid)};
  });

  criterion(3, "Freiman map and progression transfer", 10.0, [] {
    const bool hom = freiman_check().homomorphism;
    const std::int64_t mismatches = ap_transfer_mismatches();
    return Outcome{hom && mismatches == 0,
                   fmt("homomorphism=%d mismatches=%lld", hom, static_cast<long long>(mismatches))};
  });

  criterion(4, "interval function exact mean at 10007", 30.0, [] {
    set_thread_count(1);
    const Modulus m = make_modulus(10007);
    const std::int64_t t = interval_width(m);
    const std::int64_t p = interval_progression_count(t);
    const ApMean mean = apk_mean(build_F(m), 4);
    const bool exact = mean.exact_numerator && *mean.exact_numerator == -72 * p && p == 22;
    return Outcome{exact && t == 8 && mean.value <= -1e-5,
                   fmt("t=%lld p=%lld numerator=%lld mean=%.5e", static_cast<long long>(t),
                       static_cast<long long>(p), static_cast<long long>(mean.exact_numerator.value_or(0)),
                       mean.value)};
  });

  criterion(5, "quadratic phases flat; modulated intervals bounded", 120.0, [] {
    double deviation = 0.0;
    for (std::int64_t n : {5L, 101L, 10007L}) {
      const Modulus m = make_modulus(n);
      RngStream rng(1000 + n);
      for (int i = 0; i < 10; ++i) {
        const QuadraticPoly q{static_cast<std::int64_t>(1 + rng.uniform_below(n - 1)),
                              static_cast<std::int64_t>(rng.uniform_below(n)), 0};
        const Spectrum sp = dft(quadratic_phase(m, q));
        const double flat = 1.0 / std::sqrt(static_cast<double>(n));
        deviation = std::max(deviation, (sp.coeffs().cwiseAbs().array() - flat).abs().maxCoeff());
      }
    }
    const Modulus m = make_modulus(10007);
    RngStream rng(2024);
    double worst = 0.0;
    double bound = 0.0;
    bool holds = true;
    for (int i = 0; i < 100; ++i) {
      const IntervalZn I{static_cast<std::int64_t>(rng.uniform_below(m.n())),
                         static_cast<std::int64_t>(1 + rng.uniform_below(m.n()))};
      const QuadraticPoly q{static_cast<std::int64_t>(1 + rng.uniform_below(m.n() - 1)),
                            static_cast<std::int64_t>(rng.uniform_below(m.n())), 0};
      const auto check = modulated_interval_uniformity_check(m, I, q);
      holds = holds && check.holds();
      worst = std::max(worst, check.measured);
      bound = check.bound;
    }
    return Outcome{deviation <= 1e-9 && holds,
                   fmt("flatness_dev=%.2e modulated_max=%.4f bound=%.4f", deviation, worst, bound)};
  });

  criterion(6, "pattern classes, expansion identity, difference bound", 120.0, [] {
    const auto classes = classify_patterns();
    bool nulls = classes.null.size() == 2;
    for (const auto& p : classes.null) {
      nulls = nulls && p.v == 0 &&
              (p.pqrs == std::array<int, 4>{1, -3, 3, -1} || p.pqrs == std::array<int, 4>{-1, 3, -3, 1});
    }
    const Modulus small = make_modulus(1009);
    const IntSignal F_small = embed(small, lift_f(grid_g(paper_design())));
    const PatternExpansion ex = pattern_expansion(F_small);
    const double identity = std::abs(ex.total - apk_mean(build_G(F_small), 4).value);
    bool bounded = true;
    std::string detail = fmt("null=%zu identity_err=%.2e", classes.null.size(), identity);
    for (std::int64_t n : {6007L, 10007L}) {
      const Modulus m = make_modulus(n);
      const IntSignal F = build_F(m);
      const double diff = std::abs(apk_mean(build_G(F), 4).value - 2.0 * apk_mean(F, 4).value);
      const double bound = std::ldexp(1.0, 18) * log_scale(m);
      bounded = bounded && diff <= bound;
      detail += fmt(" N=%lld diff=%.3e bound=%.0f%s", static_cast<long long>(n), diff, bound,
                    bound >= 258.0 ? " (vacuous)" : "");
    }
    return Outcome{nulls && identity <= 1e-6 && bounded, detail};
  });

  criterion(7, "P range, spectrum shift, bracket identities", 60.0, [] {
    const Modulus m = make_modulus(10007);
    const RealSignal G = build_G(m);
    const RealSignal P = build_P(G);
    const auto stats = signal_stats(P);
    const Spectrum sg = dft(G);
    const Spectrum sp = dft(P);
    double shift = 0.0;
    for (std::int64_t r = 1; r < m.n(); ++r) shift = std::max(shift, std::abs(sp[r] - sg[r] / 8.0));
    const BracketExpansion ex = bracket_expansion(G);
    const double identity = std::abs(ex.total - apk_mean(P, 4).value);
    const bool all_four = ex.terms[0].contribution == 1.0 / 16.0;
    const bool gggg = ex.terms[15].contribution == std::ldexp(apk_mean(G, 4).value, -12);
    return Outcome{stats.min >= 0.0 && stats.max <= 1.0 && shift <= 1e-12 && identity <= 1e-10 && all_four && gggg,
                   fmt("P in [%.4f, %.4f] shift_err=%.2e identity_err=%.2e all_four=%d gggg=%d", stats.min,
                       stats.max, shift, identity, all_four, gggg)};
  });

  criterion(8, "normalized error terms stable across 10007/20011/40009", 600.0, [] {
    const std::vector<std::int64_t> list{10007, 20011, 40009};
    const ScalingReport report = run_scaling(list);
    bool ratios = true;
    std::string detail;
    for (const char* name : {"uniformity_G", "pattern_difference"}) {
      for (std::size_t i = 1; i < report.rows.size(); ++i) {
        const auto& a = report.rows[i - 1];
        const auto& b = report.rows[i];
        const double ra = name[0] == 'u' ? a.uniformity_G : a.pattern_difference;
        const double rb = name[0] == 'u' ? b.uniformity_G : b.pattern_difference;
        const double ratio = (rb / b.scale) / (ra / a.scale);
        ratios = ratios && ratio >= 0.1 && ratio <= 10.0;
        detail += fmt("%s%s[%zu]=%.3f", detail.empty() ? "" : " ", name, i, ratio);
      }
    }
    return Outcome{ratios, detail};
  });

  criterion(9, "sampled sets concentrate around P", 120.0, [] {
    const Modulus m = make_modulus(10007);
    const RealSignal P = build_P(m);
    const Spectrum sp = dft(P);
    const RngStream root(42);
    int density_ok = 0;
    int fourier_ok = 0;
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      RngStream rng = root.child(trial);
      const IntSignal A = sample_A(P, rng);
      const double density = signal_stats(A).mean;
      density_ok += density >= 0.48 && density <= 0.52;
      const double gap = (dft(A).coeffs() - sp.coeffs()).cwiseAbs().maxCoeff();
      worst = std::max(worst, gap);
      fourier_ok += gap <= log_scale(m);
    }
    return Outcome{density_ok == 20 && fourier_ok >= 19,
                   fmt("density_ok=%d/20 fourier_ok=%d/20 worst_gap=%.4f threshold=%.4f", density_ok,
                       fourier_ok, worst, log_scale(m))};
  });

  criterion(10, "exhaustive +-1 search at 18 reaches -36", 60.0, [] {
    const SearchResult r = min_ap4_pm1(18);
    bool witness = false;
    for (const auto& w : r.witnesses) witness = witness || ap4_sum_z(IntSignalZ(1, w)) == -36;
    return Outcome{r.exhaustive && r.best_value <= -36 && witness,
                   fmt("min=%lld witnesses=%zu", static_cast<long long>(r.best_value), r.witnesses.size())};
  });

  criterion(11, "grid search soundness and small +-1 case", 10.0, [] {
    const auto designs = search_grid_designs();
    const bool found = std::find(designs.begin(), designs.end(), paper_design()) != designs.end();
    bool all_valid = true;
    for (const auto& d : designs) all_valid = all_valid && validate_design(d).valid;
    const std::int64_t four = min_ap4_pm1(4).best_value;
    return Outcome{found && all_valid && four == 2,
                   fmt("designs=%zu reference_found=%d all_valid=%d pm1(4)=%lld", designs.size(), found, all_valid,
                       static_cast<long long>(four))};
  });

  criterion(12, "linear-form mean matches brute force and exceeds density^4", 120.0, [] {
    const Modulus m = make_modulus(101);
    const std::int64_t n = m.n();
    RngStream rng(7);
    double worst_err = 0.0;
    bool positive = true;
    for (int trial = 0; trial < 50; ++trial) {
      const double density = 0.05 + 0.9 * static_cast<double>(rng.uniform_below(1000)) / 1000.0;
      IntSignal::Vector v(n);
      for (auto& x : v) x = rng.bernoulli(density) ? 1 : 0;
      const IntSignal B(m, v);
      std::int64_t count = 0;
      for (std::int64_t x = 0; x < n; ++x) {
        if (!B[x]) continue;
        for (std::int64_t y = 0; y < n; ++y) {
          if (!B[y]) continue;
          for (std::int64_t z = 0; z < n; ++z) {
            if (B[z]) count += B.at(x - 3 * y + 3 * z);
          }
        }
      }
      const double brute = static_cast<double>(count) / static_cast<double>(n * n * n);
      const double fourier = linear_form_mean_fourier(B);
      worst_err = std::max(worst_err, std::abs(fourier - brute));
      positive = positive && fourier >= std::pow(signal_stats(B).mean, 4) - 1e-9;
    }
    return Outcome{worst_err <= 1e-9 && positive, fmt("max_err=%.2e positive=%d", worst_err, positive)};
  });

  criterion(13, "quadratic level set at 10007, c=0.05", 60.0, [] {
    const DemoReport r = run_demo_quadratic(10007, 0.05);
    return Outcome{r.uniformity < r.density / 2 && r.ap3_relative_error <= 0.2 && r.ap4_excess_ratio >= 1.1,
                   fmt("density=%.4f uniformity=%.4f ap3_rel_err=%.4f ap4_excess=%.3f", r.density, r.uniformity,
                       r.ap3_relative_error, r.ap4_excess_ratio)};
  });

  std::printf("%s: %d of 13 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
