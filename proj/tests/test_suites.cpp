#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "octoloop/constants_io.hpp"
#include "octoloop/suites.hpp"
#include "support/oracle_constants.hpp"
#include "support/perturb.hpp"

using namespace octoloop;
namespace ot = octoloop::testing;

TEST_CASE("identical configuration yields byte-identical records") {
  SuiteConfig cfg;
  cfg.points = 3;
  cfg.seed = 404;
  SuiteRunner<Rational> r1(cfg), r2(cfg);
  const auto a = r1.run(SuiteId::gle);
  const auto b = r2.run(SuiteId::gle);
  CHECK(render_records_jsonl(a) == render_records_jsonl(b));
  CHECK(a.passed());

  SuiteConfig other = cfg;
  other.seed = 405;
  SuiteRunner<Rational> r3(other);
  const auto c = r3.run(SuiteId::gle);
  CHECK(a.records.size() == c.records.size());  // same shape, different points
}

TEST_CASE("float mode runs the same pipeline within tolerance") {
  SuiteConfig cfg;
  cfg.points = 3;
  cfg.seed = 11;
  SuiteRunner<double> runner(cfg);
  const auto rep = runner.run(SuiteId::mc);
  CHECK(rep.mode == std::string("float"));
  CHECK(rep.passed());
}

TEST_CASE("exact and float verdicts coincide per identity") {
  SuiteConfig cfg;
  cfg.points = 2;
  cfg.seed = 12;
  SuiteRunner<Rational> ex(cfg);
  SuiteRunner<double> fl(cfg);
  const auto a = ex.run(SuiteId::yamaguti);
  const auto b = fl.run(SuiteId::yamaguti);
  REQUIRE(a.identities.size() == b.identities.size());
  for (size_t i = 0; i < a.identities.size(); ++i) {
    CHECK(a.identities[i].identity == b.identities[i].identity);
    CHECK(a.identities[i].pass == b.identities[i].pass);
  }
}

TEST_CASE("informational records never fail a suite") {
  SuiteConfig cfg;
  cfg.points = 2;
  cfg.seed = 13;
  SuiteRunner<Rational> runner(cfg);
  const auto rep = runner.run(SuiteId::integrability);
  CHECK(rep.passed());
  bool saw_info_nonzero = false;
  for (const auto& r : rep.identities)
    if (r.informational && r.max_defect != "0") saw_info_nonzero = true;
  CHECK(saw_info_nonzero);  // the printed variants do not vanish
}

TEST_CASE("sy suite fails with a witness on perturbed constants") {
  SuiteConfig cfg;
  cfg.seed = 14;
  SuiteRunner<Rational> runner(cfg);
  runner.set_external_constants(ot::perturb_constants(ot::oracle_octonion_constants(), 7));
  const auto rep = runner.run(SuiteId::sy);
  CHECK(!rep.passed());
  bool witnessed = false;
  for (const auto& r : rep.identities)
    if (!r.pass && !r.witness.empty()) witnessed = true;
  CHECK(witnessed);
}

TEST_CASE("algebra checks correlate on perturbed tables") {
  const auto bad = ot::perturb_constants(ot::oracle_octonion_constants(), 8);
  const auto rep = run_algebra_checks<Rational>(bad, {"maltsev", "sy"}, 1);
  CHECK(!rep.passed());
  REQUIRE(rep.identities.size() == 2);
  CHECK(rep.identities[0].pass == rep.identities[1].pass);
}

TEST_CASE("algebra checks accept the octonion table and reject bad names") {
  const auto sc = ot::oracle_octonion_constants();
  const auto rep = run_algebra_checks<Rational>(sc, {"maltsev", "sy", "rep"}, 1);
  CHECK(rep.passed());
  CHECK_THROWS_AS((void)run_algebra_checks<Rational>(sc, {"bogus"}, 1),
                  std::invalid_argument);
}

TEST_CASE("the degenerate single-point run passes every suite") {
  SuiteConfig cfg;
  cfg.points = 1;
  cfg.seed = 0;
  SuiteRunner<Rational> runner(cfg);
  const auto rep = runner.run(SuiteId::all);
  CHECK(rep.passed());
  CHECK(rep.resampled == 0);
}

TEST_CASE("summary rendering carries verdicts and witnesses") {
  SuiteConfig cfg;
  cfg.seed = 15;
  SuiteRunner<Rational> runner(cfg);
  runner.set_external_constants(ot::perturb_constants(ot::oracle_octonion_constants(), 9));
  const auto rep = runner.run(SuiteId::sy);
  const auto text = render_summary(rep);
  CHECK(text.find("FAIL") != std::string::npos);
  CHECK(text.find("witness") != std::string::npos);
  const auto lines = render_records_jsonl(rep);
  CHECK(lines.find("\"status\":\"fail\"") != std::string::npos);
}
