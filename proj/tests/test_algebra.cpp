#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "octoloop/algebra.hpp"
#include "octoloop/constants_io.hpp"
#include "octoloop/sampling.hpp"
#include "octoloop/suites.hpp"
#include "support/oracle_constants.hpp"
#include "support/perturb.hpp"

using namespace octoloop;
namespace ot = octoloop::testing;

namespace {

using Vec = AlgebraElement<Rational>;

// su(2)-like table: [e1,e2] = e3, cyclic.
StructureConstants<Rational> su2_constants() {
  std::vector<Rational> dense(27, Rational(0));
  auto set = [&](int i, int j, int k, int v) { dense[(i * 3 + j) * 3 + k] = v; };
  set(2, 0, 1, 1);
  set(2, 1, 0, -1);
  set(0, 1, 2, 1);
  set(0, 2, 1, -1);
  set(1, 2, 0, 1);
  set(1, 0, 2, -1);
  return make_structure_constants<Rational>(3, std::move(dense));
}

Vec random_vec(SampleRng& rng, int n) {
  Vec v(static_cast<size_t>(n));
  for (auto& x : v) x = rational(rng.below(9) - 4, 1 + rng.below(4));
  return v;
}

}  // namespace

TEST_CASE("symmetric storage is rejected, not silently antisymmetrized") {
  std::vector<Rational> dense(27, Rational(0));
  dense[(0 * 3 + 1) * 3 + 2] = 1;
  dense[(0 * 3 + 2) * 3 + 1] = 1;  // violates antisymmetry
  CHECK_THROWS_AS((void)make_structure_constants<Rational>(3, std::move(dense)),
                  std::invalid_argument);
}

TEST_CASE("bracket is antisymmetric and bilinear, and rejects bad dims") {
  const auto sc = ot::oracle_octonion_constants();
  SampleRng rng(31);
  for (int trial = 0; trial < 15; ++trial) {
    const auto x = random_vec(rng, 7);
    const auto y = random_vec(rng, 7);
    const auto z = random_vec(rng, 7);
    const Rational a = rational(rng.below(7) - 3, 1 + rng.below(3));
    CHECK(max_abs(bracket(sc, x, x)) == 0);
    auto xy = bracket(sc, x, y);
    auto yx = bracket(sc, y, x);
    for (int i = 0; i < 7; ++i) CHECK(xy[i] == -yx[i]);
    // bilinearity in the first slot
    Vec ax_plus_z(7);
    for (int i = 0; i < 7; ++i) ax_plus_z[i] = a * x[i] + z[i];
    const auto lhs = bracket(sc, ax_plus_z, y);
    const auto xz = bracket(sc, z, y);
    for (int i = 0; i < 7; ++i) CHECK(lhs[i] == a * xy[i] + xz[i]);
  }
  CHECK_THROWS_AS((void)bracket(sc, Vec(3, Rational(0)), Vec(7, Rational(0))),
                  std::invalid_argument);
}

TEST_CASE("octonion tangent bracket of the first two basis vectors") {
  const auto sc = ot::oracle_octonion_constants();
  const auto b = bracket(sc, algebra_basis<Rational>(7, 0), algebra_basis<Rational>(7, 1));
  Vec expected(7, Rational(0));
  expected[2] = 4;  // oracle-determined scale
  CHECK(b == expected);
}

TEST_CASE("quaternionic sub-basis closes under the bracket") {
  const auto sc = ot::oracle_octonion_constants();
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) {
      const auto b = bracket(sc, algebra_basis<Rational>(7, j), algebra_basis<Rational>(7, k));
      for (int i = 3; i < 7; ++i) CHECK(is_zero(b[i]));
    }
}

TEST_CASE("library bracket equals a raw contraction") {
  const auto sc = ot::oracle_octonion_constants();
  SampleRng rng(32);
  const auto x = random_vec(rng, 7);
  const auto y = random_vec(rng, 7);
  const auto lib = bracket(sc, x, y);
  for (int i = 0; i < 7; ++i) {
    Rational acc = 0;
    for (int j = 0; j < 7; ++j)
      for (int k = 0; k < 7; ++k) acc += sc.at(i, j, k) * x[j] * y[k];
    CHECK(lib[i] == acc);
  }
}

TEST_CASE("jacobi defect: zero on the Lie sub-basis, nonzero across the doubling") {
  const auto sc = ot::oracle_octonion_constants();
  CHECK(max_abs(jacobian(sc, algebra_basis<Rational>(7, 0), algebra_basis<Rational>(7, 0),
                         algebra_basis<Rational>(7, 1))) == 0);
  CHECK(max_abs(jacobian(sc, algebra_basis<Rational>(7, 0), algebra_basis<Rational>(7, 1),
                         algebra_basis<Rational>(7, 2))) == 0);
  const auto j124 = jacobian(sc, algebra_basis<Rational>(7, 0), algebra_basis<Rational>(7, 1),
                             algebra_basis<Rational>(7, 3));
  Vec expected(7, Rational(0));
  expected[6] = 48;  // oracle-determined value
  CHECK(j124 == expected);
}

TEST_CASE("su2 is a Lie and hence Mal'tsev algebra") {
  const auto sc = su2_constants();
  CHECK(scan_jacobi(sc).clean());
  CHECK(scan_maltsev(sc).clean());
  CHECK(scan_sagle_yamaguti(sc).clean());
}

TEST_CASE("ternary bracket: antisymmetry, trilinearity, Jacobi degeneration") {
  const auto sc = ot::oracle_octonion_constants();
  SampleRng rng(33);
  const auto x = random_vec(rng, 7);
  const auto z = random_vec(rng, 7);
  CHECK(max_abs(yamaguti_bracket(sc, x, x, z)) == 0);

  // linearity in the last slot
  {
    const auto y = random_vec(rng, 7);
    const auto z2 = random_vec(rng, 7);
    const Rational a = rational(rng.below(7) - 3, 1 + rng.below(3));
    Vec comb(7);
    for (int i = 0; i < 7; ++i) comb[i] = a * z[i] + z2[i];
    const auto lhs = yamaguti_bracket(sc, x, y, comb);
    const auto t1 = yamaguti_bracket(sc, x, y, z);
    const auto t2 = yamaguti_bracket(sc, x, y, z2);
    for (int i = 0; i < 7; ++i) CHECK(lhs[i] == a * t1[i] + t2[i]);
  }

  // on the Lie sub-basis, [x,y,z] = 2[[x,y],z]
  const auto su2 = su2_constants();
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k)
      for (int l = 0; l < 3; ++l) {
        const auto lhs = yamaguti_bracket(su2, algebra_basis<Rational>(3, j),
                                          algebra_basis<Rational>(3, k),
                                          algebra_basis<Rational>(3, l));
        const auto inner = bracket(su2, algebra_basis<Rational>(3, j),
                                   algebra_basis<Rational>(3, k));
        const auto rhs = bracket(su2, inner, algebra_basis<Rational>(3, l));
        for (int i = 0; i < 3; ++i) CHECK(lhs[i] == Rational(2) * rhs[i]);
      }
}

TEST_CASE("ternary table carries the sixth of the bracket, antisymmetrically") {
  const auto sc = ot::oracle_octonion_constants();
  const auto t = ternary_table(sc);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      for (int l = 0; l < 7; ++l) CHECK(is_zero(t.at(i, j, j, l)));
  SampleRng rng(34);
  const auto x = random_vec(rng, 7);
  const auto y = random_vec(rng, 7);
  const auto z = random_vec(rng, 7);
  const auto via_table = ternary_bracket(t, x, y, z);
  const auto direct = yamaguti_bracket(sc, x, y, z);
  for (int i = 0; i < 7; ++i) CHECK(via_table[i] == direct[i]);
}

TEST_CASE("Mal'tsev defect vanishes exhaustively on the octonion constants") {
  const auto sc = ot::oracle_octonion_constants();
  const auto out = scan_maltsev(sc);
  CHECK(out.clean());
}

TEST_CASE("Sagle-Yamaguti defect vanishes exhaustively, both routes") {
  const auto sc = ot::oracle_octonion_constants();
  CHECK(scan_sagle_yamaguti(sc).clean());
  const auto t = ternary_table(sc);
  SampleRng rng(35);
  for (int trial = 0; trial < 10; ++trial) {
    const auto x = random_vec(rng, 7);
    const auto y = random_vec(rng, 7);
    const auto z = random_vec(rng, 7);
    const auto w = random_vec(rng, 7);
    CHECK(max_abs(sagle_yamaguti_defect(sc, x, y, z, w)) == 0);
    CHECK(max_abs(sagle_yamaguti_defect(sc, t, x, y, z, w)) == 0);
    CHECK(max_abs(sagle_yamaguti_defect(sc, x, x, z, w)) == 0);  // x = y collapse
  }
}

TEST_CASE("perturbed constants break Mal'tsev with a recorded witness") {
  const auto sc = ot::oracle_octonion_constants();
  const auto bad = ot::perturb_constants(sc, 101);
  const auto out = scan_maltsev(bad, /*stop_at_first=*/true);
  CHECK(!out.clean());
  CHECK(out.witness_flat >= 0);
  CHECK(!out.witness.empty());
}

TEST_CASE("rep operator: definition probe, antisymmetry, frozen trace") {
  const auto sc = ot::oracle_octonion_constants();
  SampleRng rng(36);
  const auto x = random_vec(rng, 7);
  const auto y = random_vec(rng, 7);
  const auto dxx = rep_operator(sc, x, x);
  Rational worst = 0;
  for (const auto& v : dxx.m)
    if (worst < abs(v)) worst = abs(v);
  CHECK(worst == 0);

  const auto d = rep_operator(sc, x, y);
  const auto z = random_vec(rng, 7);
  const auto applied = d.apply(z);
  const auto direct = yamaguti_bracket(sc, x, y, z);
  for (int i = 0; i < 7; ++i) CHECK(applied[i] == direct[i]);

  const auto d12 = rep_operator(sc, algebra_basis<Rational>(7, 0),
                                algebra_basis<Rational>(7, 1));
  CHECK(d12.trace() == 0);  // oracle-determined value
}

TEST_CASE("rep commutation holds on random quadruples and breaks when perturbed") {
  const auto sc = ot::oracle_octonion_constants();
  CHECK(scan_rep_commutation(sc, 25, 99).clean());
  // degenerate pair collapses to the zero matrix
  SampleRng rng0(38);
  const auto xx = random_vec(rng0, 7);
  const auto zz = random_vec(rng0, 7);
  const auto ww = random_vec(rng0, 7);
  const auto dxx = rep_commutator_defect(sc, xx, xx, zz, ww);
  for (const auto& v : dxx.m) CHECK(is_zero(v));
  const auto bad = ot::perturb_constants(sc, 102);
  bool found = false;
  SampleRng rng(37);
  for (int trial = 0; trial < 20 && !found; ++trial) {
    const auto d = rep_commutator_defect(bad, random_vec(rng, 7), random_vec(rng, 7),
                                         random_vec(rng, 7), random_vec(rng, 7));
    for (const auto& v : d.m)
      if (!is_zero(v)) found = true;
  }
  CHECK(found);
}

TEST_CASE("constants file round trip is identical") {
  auto sc = ot::oracle_octonion_constants();
  sc.basis = {"e1", "e2", "e3", "e4", "e5", "e6", "e7"};
  const auto text = render_structure_constants(sc, {"audit line"});
  const auto back = parse_structure_constants(text);
  CHECK(back.dim == sc.dim);
  CHECK(back.basis == sc.basis);
  for (size_t i = 0; i < sc.c.size(); ++i) CHECK(back.c[i] == sc.c[i]);
  CHECK(render_structure_constants(back, {"audit line"}) == text);
}

TEST_CASE("constants file: malformed inputs produce diagnostics") {
  CHECK_THROWS_AS((void)parse_structure_constants("not json"), input_error);
  CHECK_THROWS_AS((void)parse_structure_constants("{}"), input_error);
  CHECK_THROWS_AS((void)parse_structure_constants(R"({"dim": 0})"), input_error);
  // both an entry and its antisymmetric image
  CHECK_THROWS_AS((void)parse_structure_constants(
                      R"({"dim": 2, "entries": [[0,0,1,"1"],[0,1,0,"-1"]]})"),
                  input_error);
  // duplicate entry
  CHECK_THROWS_AS((void)parse_structure_constants(
                      R"({"dim": 2, "entries": [[0,0,1,"1"],[0,0,1,"1"]]})"),
                  input_error);
  // nonzero diagonal
  CHECK_THROWS_AS(
      (void)parse_structure_constants(R"({"dim": 2, "entries": [[0,1,1,"1"]]})"),
      input_error);
  // decimal value
  CHECK_THROWS_AS(
      (void)parse_structure_constants(R"({"dim": 2, "entries": [[0,0,1,"0.5"]]})"),
      input_error);
  // index out of range
  CHECK_THROWS_AS(
      (void)parse_structure_constants(R"({"dim": 2, "entries": [[0,0,2,"1"]]})"),
      input_error);
  // basis length mismatch
  CHECK_THROWS_AS((void)parse_structure_constants(R"({"dim": 2, "basis": ["a"]})"),
                  input_error);
}

TEST_CASE("omitted entries are zero and the image is implied") {
  const auto sc =
      parse_structure_constants(R"({"dim": 3, "entries": [[2,0,1,"5/2"]]})");
  CHECK(sc.at(2, 0, 1) == rational(5, 2));
  CHECK(sc.at(2, 1, 0) == rational(-5, 2));
  CHECK(is_zero(sc.at(0, 1, 2)));
}
