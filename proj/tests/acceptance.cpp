// Acceptance suite: one verdict line per criterion, exact arithmetic
// throughout, fixed seeds. Exit status is nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "octoloop/geometry.hpp"
#include "octoloop/suites.hpp"
#include "support/perturb.hpp"

using namespace octoloop;
namespace ot = octoloop::testing;

namespace {

using S = Rational;

struct Verdict {
  int id;
  bool pass;
  std::string title;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Fixture {
  LocalLoop<S> loop;
  StructureConstants<S> constants;
  TernaryTable<S> table;
};

Fixture make_fixture() {
  SampleRng rng(0xC0FFEEull);
  std::vector<std::pair<ChartPoint<S>, ChartPoint<S>>> probes;
  for (int i = 0; i < 2; ++i)
    probes.emplace_back(sample_chart_point<S>(rng), sample_chart_point<S>(rng));
  auto loop = calibrate_frames<S>(probes);
  std::vector<ChartPoint<S>> pts = {probes[0].first, probes[1].second};
  auto sc = derive_structure_constants(loop, pts);
  auto table = yamaguti_constants(loop, sc);
  return {loop, std::move(sc), std::move(table)};
}

// criterion 1: all three Moufang forms on 100 seeded random octonions
Verdict criterion_moufang() {
  const auto t0 = std::chrono::steady_clock::now();
  SampleRng rng(101);
  bool ok = true;
  for (int trial = 0; trial < 100 && ok; ++trial) {
    const auto g = sample_octonion<S>(rng);
    const auto h = sample_octonion<S>(rng);
    const auto k = sample_octonion<S>(rng);
    for (const auto& d : moufang_defects(g, h, k))
      for (const auto& c : d.c)
        if (!is_zero(c)) ok = false;
  }
  const double elapsed = seconds_since(t0);
  if (elapsed >= 10.0) ok = false;
  char detail[96];
  std::snprintf(detail, sizeof detail, "three Moufang forms, 100 octonions, %.2fs",
                elapsed);
  return {1, ok, "Moufang loop realization", detail};
}

template <class Scalar>
SuiteReport run_suite(SuiteId id, int points, int tuples = 0, uint64_t seed = 1) {
  SuiteConfig cfg;
  cfg.points = points;
  cfg.seed = seed;
  cfg.tuples = tuples;
  SuiteRunner<Scalar> runner(cfg);
  return runner.run(id);
}

Verdict from_report(int id, const char* title, const SuiteReport& rep,
                    const std::string& extra = "") {
  std::string detail = std::to_string(rep.points) + " points";
  if (!extra.empty()) detail += ", " + extra;
  if (!rep.passed()) {
    for (const auto& r : rep.identities)
      if (!r.pass && !r.informational) {
        detail += "; failing: " + r.identity + " max defect " + r.max_defect;
        break;
      }
  }
  return {id, rep.passed(), title, detail};
}

Verdict criterion_constants_coherence(const Fixture& fx) {
  // both routes agree componentwise inside yamaguti_constants (recomputed
  // here so a convention failure shows up as a verdict, not a crash), and
  // the result matches the algebra-side table within the factor-6 convention
  bool ok = true;
  std::string detail = "linearization route vs associator route, all components";
  try {
    const auto table = yamaguti_constants(fx.loop, fx.constants);
    const auto direct = ternary_table(fx.constants);
    for (size_t i = 0; i < table.y.size() && ok; ++i)
      if (table.y[i] != direct.y[i]) ok = false;
    if (!ok) detail = "tables disagree across modules";
  } catch (const convention_error& e) {
    ok = false;
    detail = e.what();
  }
  return {5, ok, "constants coherence", detail};
}

Verdict criterion_hidden(const Fixture& fx, const SuiteReport& rep) {
  bool ok = rep.passed();
  std::string detail = "10 points x 5 quadruples";

  const auto rep_ops = scan_rep_commutation(fx.constants, 50, 1);
  if (!rep_ops.clean()) {
    ok = false;
    detail += "; operator commutation failed at " + rep_ops.witness;
  }

  const auto t0 = std::chrono::steady_clock::now();
  const auto sy = scan_sagle_yamaguti(fx.constants);
  const double elapsed = seconds_since(t0);
  if (!sy.clean()) {
    ok = false;
    detail += "; exhaustive quadruple scan failed at " + sy.witness;
  }
  if (elapsed >= 60.0) {
    ok = false;
    detail += "; quadruple scan too slow";
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "; 2401 quadruples in %.2fs; 50 operator samples",
                elapsed);
  detail += buf;
  return {8, ok, "hidden associativity", detail};
}

Verdict criterion_negative_controls(const Fixture& fx) {
  bool ok = true;
  int broken = 0;
  for (int control = 0; control < 20; ++control) {
    const auto bad = ot::perturb_constants(fx.constants, 1000 + control);
    const bool maltsev_clean = scan_maltsev(bad, /*stop_at_first=*/true).clean();
    const bool sy_clean = scan_sagle_yamaguti(bad, /*stop_at_first=*/true).clean();
    if (maltsev_clean != sy_clean) ok = false;
    if (!maltsev_clean) ++broken;
  }
  const std::string detail = "20 perturbed algebras, " + std::to_string(broken) +
                             " break both identities, 0 break only one";
  return {10, ok, "negative controls", detail};
}

Verdict criterion_degeneration(const Fixture& fx) {
  // the associative limit on the quaternionic sub-chart
  SampleRng rng(77);
  bool assoc_ok = true, yam_ok = true, comm_ok = true;
  std::string yam_witness;
  for (int trial = 0; trial < 20; ++trial) {
    auto g = sample_chart_point<S>(rng);
    for (int i = 3; i < loop_dim; ++i) g[i] = 0;

    const auto l = associator_functions(fx.loop, g);
    for (int i = 0; i < loop_dim; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
          if (!is_zero(l[i][j][k])) assoc_ok = false;

    const auto y = yamaguti_functions(fx.loop, g);
    for (int i = 0; i < loop_dim; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
          if (!is_zero(y[i][j][k])) {
            if (yam_ok) yam_witness = to_string(y[i][j][k]);
            yam_ok = false;
          }

    auto x = sample_tangent<S>(rng);
    auto z = sample_tangent<S>(rng);
    for (int i = 3; i < loop_dim; ++i) x[i] = z[i] = 0;
    const auto lr = eval_at(commutator(translation(fx.loop, Trans::L, x),
                                       translation(fx.loop, Trans::R, z)),
                            g);
    if (!is_zero(max_abs(lr))) comm_ok = false;
  }
  std::string detail = std::string("associator block ") + (assoc_ok ? "zero" : "NONZERO") +
                       "; translation commutators " + (comm_ok ? "zero" : "NONZERO") +
                       "; Yamaguti block " + (yam_ok ? "zero" : "NONZERO");
  if (!yam_ok)
    detail += " (e.g. " + yam_witness +
              "; equals -(1/3) C(u - v) there, which the reductivity relations force to "
              "be nonzero on a nonabelian block)";
  return {11, assoc_ok && yam_ok && comm_ok, "associative degeneration", detail};
}

}  // namespace

int main() {
  std::vector<Verdict> verdicts;
  const auto t0 = std::chrono::steady_clock::now();

  const Fixture fx = make_fixture();

  verdicts.push_back(criterion_moufang());

  const auto gle_exact = run_suite<S>(SuiteId::gle, 50);
  verdicts.push_back(from_report(2, "generalized Lie equations", gle_exact,
                                 "includes the frame constraint"));

  const auto mc_exact = run_suite<S>(SuiteId::mc, 50);
  verdicts.push_back(
      from_report(3, "Maurer-Cartan relations", mc_exact, "bracket and Yamagutian forms"));

  const auto integ_exact = run_suite<S>(SuiteId::integrability, 50);
  verdicts.push_back(from_report(4, "integrability and linearization", integ_exact,
                                 "pairs and the first-order relation"));

  verdicts.push_back(criterion_constants_coherence(fx));

  const auto red_exact = run_suite<S>(SuiteId::reductivity, 20, 5);
  verdicts.push_back(from_report(6, "reductivity", red_exact,
                                 "5 triples per point, both translation families"));

  const auto pair_exact = run_suite<S>(SuiteId::prop11, 20);
  verdicts.push_back(from_report(7, "conjugate pair relations", pair_exact,
                                 "includes inverse conjugation"));

  const auto hidden_exact = run_suite<S>(SuiteId::hidden, 10, 5);
  verdicts.push_back(criterion_hidden(fx, hidden_exact));

  const auto maltsev = scan_maltsev(fx.constants);
  verdicts.push_back({9, maltsev.clean(), "Mal'tsev identity",
                      maltsev.clean() ? "343 basis triples, exhaustive"
                                      : "failed at " + maltsev.witness});

  verdicts.push_back(criterion_negative_controls(fx));
  verdicts.push_back(criterion_degeneration(fx));

  // criterion 12: the float pipeline reproduces criteria 2-8 below 1e-9 at
  // the same sample points, with identical verdicts
  {
    const auto gle_f = run_suite<double>(SuiteId::gle, 50);
    const auto mc_f = run_suite<double>(SuiteId::mc, 50);
    const auto integ_f = run_suite<double>(SuiteId::integrability, 50);
    const auto red_f = run_suite<double>(SuiteId::reductivity, 20, 5);
    const auto pair_f = run_suite<double>(SuiteId::prop11, 20);
    const auto hidden_f = run_suite<double>(SuiteId::hidden, 10, 5);
    bool constants_f_ok = true;
    try {
      SuiteConfig cfg;
      cfg.points = 1;
      SuiteRunner<double> r(cfg);
      (void)r.constants();  // forces float calibration, derivation, both routes
    } catch (const std::exception&) {
      constants_f_ok = false;
    }
    const bool float_pass = gle_f.passed() && mc_f.passed() && integ_f.passed() &&
                            red_f.passed() && pair_f.passed() && hidden_f.passed() &&
                            constants_f_ok;
    const bool verdicts_match =
        gle_f.passed() == gle_exact.passed() && mc_f.passed() == mc_exact.passed() &&
        integ_f.passed() == integ_exact.passed() &&
        red_f.passed() == red_exact.passed() && pair_f.passed() == pair_exact.passed() &&
        hidden_f.passed() == hidden_exact.passed();
    verdicts.push_back({12, float_pass && verdicts_match, "mode agreement",
                        "float defects below 1e-9 at the same points, identical verdicts"});
  }

  bool all_pass = true;
  for (const auto& v : verdicts) {
    std::printf("[%s] criterion %2d: %s — %s\n", v.pass ? "PASS" : "FAIL", v.id, v.title.c_str(),
                v.detail.c_str());
    if (!v.pass) all_pass = false;
  }
  std::printf("acceptance: %d/%zu criteria passed in %.1fs\n",
              static_cast<int>(std::count_if(verdicts.begin(), verdicts.end(),
                                             [](const Verdict& v) { return v.pass; })),
              verdicts.size(), seconds_since(t0));
  return all_pass ? 0 : 1;
}
