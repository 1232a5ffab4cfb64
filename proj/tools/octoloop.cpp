// Command-line front door: derive the octonion-loop structure constants,
// run the identity suites, run algebra-level checks on a constants file.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "octoloop/constants_io.hpp"
#include "octoloop/suites.hpp"

namespace {

using namespace octoloop;

std::vector<std::string> multiplication_table_lines() {
  auto name = [](int k, bool negative) {
    std::string s = negative ? "-" : "";
    return s + (k == 0 ? std::string("1") : "e" + std::to_string(k));
  };
  std::vector<std::string> lines;
  lines.push_back("octonion multiplication table (audit):");
  for (int i = 0; i < 8; ++i) {
    std::string row;
    for (int j = 0; j < 8; ++j) {
      const auto prod = Octonion<Rational>::basis(i) * Octonion<Rational>::basis(j);
      int k = -1;
      bool negative = false;
      for (int c = 0; c < 8; ++c) {
        if (is_zero(prod.c[c])) continue;
        k = c;
        negative = sgn(prod.c[c]) < 0;
      }
      const std::string lhs = name(i, false) + "*" + name(j, false);
      row += lhs + "=" + name(k, negative) + (j < 7 ? "  " : "");
    }
    lines.push_back(row);
  }
  return lines;
}

StructureConstants<Rational> derive_exact() {
  SampleRng rng(0xC0FFEEull);
  std::vector<std::pair<ChartPoint<Rational>, ChartPoint<Rational>>> probes;
  for (int i = 0; i < 2; ++i)
    probes.emplace_back(sample_chart_point<Rational>(rng),
                        sample_chart_point<Rational>(rng));
  const auto loop = calibrate_frames<Rational>(probes);
  std::vector<ChartPoint<Rational>> pts = {probes[0].first, probes[1].second};
  auto sc = derive_structure_constants(loop, pts);
  sc.basis = {"e1", "e2", "e3", "e4", "e5", "e6", "e7"};
  return sc;
}

int cmd_derive(const std::string& output) {
  const auto sc = derive_exact();
  const std::string text = render_structure_constants(sc, multiplication_table_lines());
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output);
    if (!out) throw input_error("cannot open output file: " + output);
    out << text;
    if (!out) throw input_error("failed writing output file: " + output);
  }
  return 0;
}

template <class S>
int check_with_mode(const std::string& suite, SuiteConfig cfg, const std::string& input,
                    const std::string& report_path) {
  SuiteRunner<S> runner(cfg);
  if (!input.empty())
    runner.set_external_constants(convert_constants<S>(load_structure_constants(input)));
  const auto rep = runner.run(parse_suite(suite));
  std::cout << render_summary(rep);
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) throw input_error("cannot open report file: " + report_path);
    out << render_records_jsonl(rep);
  }
  return rep.passed() ? 0 : 1;
}

int cmd_check(const std::string& suite, int points, uint64_t seed,
              const std::string& mode, const std::string& input,
              const std::string& report_path) {
  if (points < 1) throw input_error("--points must be at least 1");
  SuiteConfig cfg;
  cfg.points = points;
  cfg.seed = seed;
  if (mode == "exact") return check_with_mode<Rational>(suite, cfg, input, report_path);
  if (mode == "float") return check_with_mode<double>(suite, cfg, input, report_path);
  throw input_error("--mode must be exact or float");
}

int cmd_algebra(const std::string& input, const std::string& checks_csv, uint64_t seed,
                const std::string& report_path) {
  const auto sc = load_structure_constants(input);
  std::vector<std::string> checks;
  std::string item;
  for (char ch : checks_csv + ",") {
    if (ch == ',') {
      if (!item.empty()) checks.push_back(item);
      item.clear();
    } else {
      item += ch;
    }
  }
  SuiteReport rep;
  try {
    rep = run_algebra_checks<Rational>(sc, checks, seed);
  } catch (const std::invalid_argument& e) {
    throw input_error(e.what());
  }
  std::cout << render_summary(rep);

  const IdentityResult* maltsev = nullptr;
  const IdentityResult* sy = nullptr;
  for (const auto& r : rep.identities) {
    if (r.identity == "maltsev_exhaustive") maltsev = &r;
    if (r.identity == "sagle_yamaguti_exhaustive") sy = &r;
  }
  if (maltsev && sy) {
    std::cout << "contingency: maltsev=" << (maltsev->pass ? "pass" : "fail")
              << " sagle_yamaguti=" << (sy->pass ? "pass" : "fail")
              << (maltsev->pass == sy->pass ? " (correlated)" : " (mixed)") << "\n";
  }
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) throw input_error("cannot open report file: " + report_path);
    out << render_records_jsonl(rep);
  }
  return rep.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact identity checker for the unit-octonion Moufang loop"};
  app.require_subcommand(1);

  auto* derive = app.add_subcommand("derive", "emit the tangent structure constants");
  std::string output;
  derive->add_option("--output", output, "output path (default: stdout)");

  auto* check = app.add_subcommand("check", "run an identity suite");
  std::string suite = "all", mode = "exact", input, report_path;
  int points = 20;
  uint64_t seed = 1;
  check->add_option("--suite", suite,
                    "gle|mc|yamaguti|integrability|reductivity|prop11|hidden|sy|all");
  check->add_option("--points", points, "sample point count");
  check->add_option("--seed", seed, "sample seed");
  check->add_option("--mode", mode, "exact|float");
  check->add_option("--input", input, "constants file overriding the derived table (sy)");
  check->add_option("--report", report_path, "write JSON-lines records here");

  auto* algebra = app.add_subcommand("algebra", "exhaustive checks on a constants file");
  std::string a_input, a_checks = "maltsev,sy,rep", a_report;
  uint64_t a_seed = 1;
  algebra->add_option("--input", a_input, "constants file")->required();
  algebra->add_option("--checks", a_checks, "comma list: maltsev,sy,jacobi,rep");
  algebra->add_option("--seed", a_seed, "seed for sampled checks");
  algebra->add_option("--report", a_report, "write JSON-lines records here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  try {
    if (derive->parsed()) return cmd_derive(output);
    if (check->parsed()) return cmd_check(suite, points, seed, mode, input, report_path);
    if (algebra->parsed()) return cmd_algebra(a_input, a_checks, a_seed, a_report);
  } catch (const octoloop::convention_error& e) {
    std::cerr << "convention error: " << e.what() << "\n";
    return 2;
  } catch (const octoloop::input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
