// Command-line front end: verification pipeline, scaling and demo reports, spectra,
// progression counts, searches, and signal export.
//
// Exit codes: 0 all checks passed, 1 a check failed, 2 usage or input error.

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "apuniform/apuniform.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

void print_checks(const std::vector<apu::CheckRecord>& checks) {
  for (const auto& c : checks) {
    const char* status = c.skipped ? "SKIP" : (c.passed ? "PASS" : "FAIL");
    std::printf("%-4s %-32s", status, c.name.c_str());
    if (!c.measured.empty()) {
      std::printf(" %s=%.6g", c.measured.front().first.c_str(), c.measured.front().second);
    }
    if (c.bound) std::printf(" %s %.6g", c.relation.c_str(), *c.bound);
    if (c.vacuous_at_this_N) std::printf(" (vacuous at this N)");
    std::printf("\n");
  }
}

void emit(const std::string& json, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << json;
  } else {
    apu::write_text_file(out_path, json);
  }
}

std::vector<std::int64_t> parse_list(const std::string& text) {
  std::vector<std::int64_t> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw apu::Error(apu::Errc::InvalidArgument, "bad list entry \"" + item + "\"");
    }
  }
  if (values.empty()) throw apu::Error(apu::Errc::InvalidArgument, "empty modulus list");
  return values;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Uniform sets with few 4-term progressions: constructions and checks"};
  app.require_subcommand(1);
  unsigned threads = 1;
  app.add_option("--threads", threads, "Worker threads (affects speed only)")->check(CLI::PositiveNumber);

  std::int64_t n = 10007;
  std::uint64_t seed = 42;
  int trials = 20;
  double c = 0.05;
  int k = 4;
  std::string out_path;
  std::string csv_path;
  std::string file_path;
  std::string construction;
  std::string n_list;
  std::string space;

  auto* verify = app.add_subcommand("verify", "Run the end-to-end verification pipeline");
  verify->add_option("--n", n, "Prime modulus")->required();
  verify->add_option("--seed", seed, "Sampling seed");
  verify->add_option("--trials", trials, "Independent samples of A")->check(CLI::NonNegativeNumber);
  verify->add_option("--out", out_path, "Report JSON path");

  auto* scaling = app.add_subcommand("scaling", "Normalized error terms across several moduli");
  scaling->add_option("--n-list", n_list, "Comma-separated primes")->required();
  scaling->add_option("--out", out_path, "Report JSON path");

  auto* demo = app.add_subcommand("demo-quad", "Quadratic level set with excess 4-APs");
  demo->add_option("--n", n, "Prime modulus")->required();
  demo->add_option("--c", c, "Level-set half-width as a fraction of n");
  demo->add_option("--out", out_path, "Report JSON path");

  auto* spectrum = app.add_subcommand("spectrum", "Export the spectrum of F, G or P as CSV");
  spectrum->add_option("--construction", construction, "F, G or P")
      ->required()
      ->check(CLI::IsMember({"F", "G", "P"}));
  spectrum->add_option("--n", n, "Prime modulus")->required();
  spectrum->add_option("--csv", csv_path, "Output CSV path")->required();

  auto* count = app.add_subcommand("count", "Mean of k-term progression products of a signal file");
  count->add_option("--file", file_path, "Signal JSON")->required();
  count->add_option("--k", k, "Progression length")->check(CLI::IsMember({3, 4, 5}));

  auto* search = app.add_subcommand("search", "Exhaustive searches");
  search->add_option("space", space, "grid, pm1 or ternary")
      ->required()
      ->check(CLI::IsMember({"grid", "pm1", "ternary"}));
  search->add_option("--n", n, "Domain size {1..n} for pm1 / ternary");
  search->add_option("--out", out_path, "Result JSON path");

  auto* signal = app.add_subcommand("signal", "Export a construction in the signal JSON format");
  signal->add_option("--construction", construction, "F, G, P, A or quad_levelset")
      ->required()
      ->check(CLI::IsMember({"F", "G", "P", "A", "quad_levelset"}));
  signal->add_option("--n", n, "Prime modulus")->required();
  signal->add_option("--seed", seed, "Seed for A");
  signal->add_option("--c", c, "Width for quad_levelset");
  signal->add_option("--out", out_path, "Signal JSON path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  apu::set_thread_count(threads);

  try {
    if (verify->parsed()) {
      const auto report = apu::run_verify(n, seed, trials);
      if (out_path.empty()) {
        std::cout << apu::report_to_json(report);
      } else {
        apu::save_report(report, out_path);
        print_checks(report.checks);
      }
      return report.all_passed() ? kExitPass : kExitCheckFailure;
    }
    if (scaling->parsed()) {
      const auto list = parse_list(n_list);
      const auto report = apu::run_scaling(list);
      emit(apu::report_to_json(report), out_path);
      if (!out_path.empty()) print_checks(report.checks);
      return report.all_passed() ? kExitPass : kExitCheckFailure;
    }
    if (demo->parsed()) {
      const auto report = apu::run_demo_quadratic(n, c);
      emit(apu::report_to_json(report), out_path);
      if (!out_path.empty()) print_checks(report.checks);
      return report.all_passed() ? kExitPass : kExitCheckFailure;
    }
    if (spectrum->parsed()) {
      const apu::Modulus m = apu::make_modulus(n);
      std::optional<apu::Spectrum> sp;
      if (construction == "F") sp = apu::dft(apu::build_F(m));
      if (construction == "G") sp = apu::dft(apu::build_G(m));
      if (construction == "P") sp = apu::dft(apu::build_P(m));
      apu::save_spectrum_csv(*sp, csv_path);
      std::printf("wrote %lld rows to %s (uniformity %.17g)\n", static_cast<long long>(sp->size()),
                  csv_path.c_str(), apu::uniformity(*sp));
      return kExitPass;
    }
    if (count->parsed()) {
      const apu::LoadedSignal loaded = apu::load_signal(file_path);
      const apu::ApMean mean =
          std::visit([&](const auto& s) { return apu::apk_mean(s, k); }, loaded);
      const std::int64_t size = std::visit([](const auto& s) { return s.size(); }, loaded);
      std::printf("{\"k\": %d, \"n\": %lld, \"value\": %.17g", k, static_cast<long long>(size), mean.value);
      if (mean.exact_numerator) {
        std::printf(", \"exact_numerator\": %lld", static_cast<long long>(*mean.exact_numerator));
      }
      std::printf(", \"pair_count\": %llu}\n", static_cast<unsigned long long>(mean.pair_count));
      return kExitPass;
    }
    if (search->parsed()) {
      if (space == "grid") {
        std::uint64_t nodes = 0;
        const auto designs = apu::search_grid_designs(0, &nodes);
        std::ostringstream json;
        json << "{\n  \"space\": \"grid\",\n  \"count\": " << designs.size()
             << ",\n  \"contains_reference_design\": "
             << (std::find(designs.begin(), designs.end(), apu::paper_design()) != designs.end()
                     ? "true"
                     : "false")
             << ",\n  \"nodes_explored\": " << nodes << ",\n  \"exhaustive\": true,\n  \"designs\": [";
        for (std::size_t i = 0; i < designs.size(); ++i) {
          json << (i ? ",\n    [" : "\n    [");
          const auto triples = designs[i].to_strings();
          for (std::size_t j = 0; j < triples.size(); ++j) json << (j ? ", \"" : "\"") << triples[j] << '"';
          json << ']';
        }
        json << "\n  ]\n}\n";
        emit(json.str(), out_path);
        return kExitPass;
      }
      const auto result = space == "pm1" ? apu::min_ap4_pm1(static_cast<int>(n))
                                         : apu::min_ap4_ternary(static_cast<int>(n));
      emit(apu::search_result_to_json(result), out_path);
      return kExitPass;
    }
    if (signal->parsed()) {
      const apu::Modulus m = apu::make_modulus(n);
      std::string json;
      if (construction == "F") json = apu::signal_to_json(apu::build_F(m));
      if (construction == "G") json = apu::signal_to_json(apu::build_G(m));
      if (construction == "P") json = apu::signal_to_json(apu::build_P(m));
      if (construction == "quad_levelset") json = apu::signal_to_json(apu::quad_levelset(m, c));
      if (construction == "A") {
        apu::RngStream rng(seed);
        json = apu::signal_to_json(apu::sample_A(apu::build_P(m), rng));
      }
      emit(json, out_path);
      return kExitPass;
    }
  } catch (const apu::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
