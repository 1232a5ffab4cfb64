#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "octoloop/geometry.hpp"
#include "octoloop/report.hpp"
#include "octoloop/sampling.hpp"

namespace octoloop {

enum class SuiteId {
  gle,
  mc,
  yamaguti,
  integrability,
  reductivity,
  prop11,
  hidden,
  sy,
  all
};

inline const char* suite_name(SuiteId id) {
  switch (id) {
    case SuiteId::gle: return "gle";
    case SuiteId::mc: return "mc";
    case SuiteId::yamaguti: return "yamaguti";
    case SuiteId::integrability: return "integrability";
    case SuiteId::reductivity: return "reductivity";
    case SuiteId::prop11: return "prop11";
    case SuiteId::hidden: return "hidden";
    case SuiteId::sy: return "sy";
    case SuiteId::all: return "all";
  }
  return "?";
}

inline SuiteId parse_suite(const std::string& name) {
  for (SuiteId id : {SuiteId::gle, SuiteId::mc, SuiteId::yamaguti, SuiteId::integrability,
                     SuiteId::reductivity, SuiteId::prop11, SuiteId::hidden, SuiteId::sy,
                     SuiteId::all})
    if (name == suite_name(id)) return id;
  throw std::invalid_argument("unknown suite: " + name);
}

struct SuiteConfig {
  int points = 20;
  uint64_t seed = 1;
  int tuples = 0;  // random tangent tuples per point; 0 = suite default
};

template <class S>
struct ScanOutcome {
  S max_defect = S(0);
  int witness_flat = -1;  // flattened tuple index of the max defect
  std::string witness;
  bool clean() const { return ScalarMode<S>::negligible(max_defect); }
};

template <class S>
ScanOutcome<S> scan_maltsev(const StructureConstants<S>& sc, bool stop_at_first = false) {
  const int n = sc.dim;
  ScanOutcome<S> out;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        const S m = max_abs(maltsev_defect(sc, algebra_basis<S>(n, j),
                                           algebra_basis<S>(n, k), algebra_basis<S>(n, l)));
        if (out.max_defect < m) {
          out.max_defect = m;
          out.witness_flat = (j * n + k) * n + l;
          out.witness = "(" + std::to_string(j) + "," + std::to_string(k) + "," +
                        std::to_string(l) + ")";
          if (stop_at_first && !out.clean()) return out;
        }
      }
  return out;
}

template <class S>
ScanOutcome<S> scan_jacobi(const StructureConstants<S>& sc, bool stop_at_first = false) {
  const int n = sc.dim;
  ScanOutcome<S> out;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        const S m = max_abs(jacobian(sc, algebra_basis<S>(n, j), algebra_basis<S>(n, k),
                                     algebra_basis<S>(n, l)));
        if (out.max_defect < m) {
          out.max_defect = m;
          out.witness_flat = (j * n + k) * n + l;
          out.witness = "(" + std::to_string(j) + "," + std::to_string(k) + "," +
                        std::to_string(l) + ")";
          if (stop_at_first && !out.clean()) return out;
        }
      }
  return out;
}

template <class S>
ScanOutcome<S> scan_sagle_yamaguti(const StructureConstants<S>& sc,
                                   bool stop_at_first = false) {
  const int n = sc.dim;
  ScanOutcome<S> out;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l)
        for (int m = 0; m < n; ++m) {
          const S a = max_abs(sagle_yamaguti_defect(
              sc, algebra_basis<S>(n, j), algebra_basis<S>(n, k), algebra_basis<S>(n, l),
              algebra_basis<S>(n, m)));
          if (out.max_defect < a) {
            out.max_defect = a;
            out.witness_flat = ((j * n + k) * n + l) * n + m;
            out.witness = "(" + std::to_string(j) + "," + std::to_string(k) + "," +
                          std::to_string(l) + "," + std::to_string(m) + ")";
            if (stop_at_first && !out.clean()) return out;
          }
        }
  return out;
}

template <class S>
ScanOutcome<S> scan_rep_commutation(const StructureConstants<S>& sc, int samples,
                                    uint64_t seed) {
  const int n = sc.dim;
  ScanOutcome<S> out;
  SampleRng rng(seed);
  auto draw = [&] {
    AlgebraElement<S> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
      v[static_cast<size_t>(i)] = scalar_fraction<S>(rng.below(7) - 3, 1 + rng.below(4));
    return v;
  };
  for (int s = 0; s < samples; ++s) {
    const auto d = rep_commutator_defect(sc, draw(), draw(), draw(), draw());
    S worst = S(0);
    for (const auto& v : d.m) {
      S a = abs_value(v);
      if (worst < a) worst = a;
    }
    if (out.max_defect < worst) {
      out.max_defect = worst;
      out.witness_flat = s;
      out.witness = "sample " + std::to_string(s);
    }
  }
  return out;
}

/// Runs the identity suites over deterministic sample points. Point index 0
/// is always the chart origin, so every suite exercises the degenerate
/// point; chart-singular draws are resampled and counted.
template <class S>
class SuiteRunner {
 public:
  explicit SuiteRunner(SuiteConfig cfg) : cfg_(cfg) {}

  /// Replaces the derived constants for the algebra-level suite (sy).
  void set_external_constants(StructureConstants<S> sc) {
    external_constants_ = std::move(sc);
  }

  SuiteReport run(SuiteId id) {
    SuiteReport rep;
    rep.suite = suite_name(id);
    rep.mode = ScalarMode<S>::name;
    rep.seed = cfg_.seed;
    rep.points = cfg_.points;
    const auto t0 = std::chrono::steady_clock::now();
    if (id == SuiteId::all) {
      for (SuiteId sub : {SuiteId::gle, SuiteId::mc, SuiteId::yamaguti,
                          SuiteId::integrability, SuiteId::reductivity, SuiteId::prop11,
                          SuiteId::hidden, SuiteId::sy})
        run_one(sub, rep);
    } else {
      run_one(id, rep);
    }
    rep.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
  }

  const LocalLoop<S>& loop() { return geometry().loop; }
  const StructureConstants<S>& constants() { return geometry().constants; }
  const TernaryTable<S>& table() { return geometry().table; }

 private:
  struct Geometry {
    LocalLoop<S> loop;
    StructureConstants<S> constants;
    TernaryTable<S> table;
  };

  // Accumulates per-identity maxima and emits one record per evaluation.
  class Accum {
   public:
    Accum(SuiteReport& rep, std::string suite) : rep_(rep), suite_(std::move(suite)) {}

    void add(const std::string& identity, int point_index, const S& defect_abs,
             bool informational = false, const std::string& witness = "") {
      const bool ok = ScalarMode<S>::negligible(defect_abs);
      auto* res = find(identity);
      if (!res) {
        rep_.identities.push_back({identity, true, informational, "0", -1, ""});
        res = &rep_.identities.back();
        maxima_.emplace_back(identity, S(0));
      }
      res->informational = informational;
      S& current = maximum(identity);
      if (current < defect_abs) {
        current = defect_abs;
        res->max_defect = ScalarMode<S>::render(defect_abs);
        if (informational || !ok) {
          if (res->pass || informational) {
            res->witness_point = point_index;
            res->witness = witness;
          }
        }
      }
      if (!informational && !ok && res->pass) {
        res->pass = false;
        res->witness_point = point_index;
        res->witness = witness;
      }
      rep_.records.push_back({suite_, identity, point_index,
                              ScalarMode<S>::render(defect_abs),
                              informational ? "info" : (ok ? "pass" : "fail")});
    }

   private:
    IdentityResult* find(const std::string& identity) {
      for (auto& r : rep_.identities)
        if (r.identity == identity) return &r;
      return nullptr;
    }
    S& maximum(const std::string& identity) {
      for (auto& [name, value] : maxima_)
        if (name == identity) return value;
      throw std::logic_error("accum: unknown identity");
    }

    SuiteReport& rep_;
    std::string suite_;
    std::vector<std::pair<std::string, S>> maxima_;
  };

  void run_one(SuiteId id, SuiteReport& rep) {
    Accum acc(rep, suite_name(id));
    switch (id) {
      case SuiteId::gle: return run_gle(rep, acc);
      case SuiteId::mc: return run_mc(rep, acc);
      case SuiteId::yamaguti: return run_yamaguti(rep, acc);
      case SuiteId::integrability: return run_integrability(rep, acc);
      case SuiteId::reductivity: return run_reductivity(rep, acc);
      case SuiteId::prop11: return run_prop11(rep, acc);
      case SuiteId::hidden: return run_hidden(rep, acc);
      case SuiteId::sy: return run_sy(acc);
      case SuiteId::all: break;
    }
  }

  Geometry& geometry() {
    if (!geom_) {
      // Fixed internal stream: the calibration must not depend on the
      // user-facing sample seed.
      SampleRng rng(0xC0FFEEull);
      std::vector<std::pair<ChartPoint<S>, ChartPoint<S>>> probes;
      for (int i = 0; i < 2; ++i)
        probes.emplace_back(sample_chart_point<S>(rng), sample_chart_point<S>(rng));
      LocalLoop<S> loop = calibrate_frames<S>(probes);
      std::vector<ChartPoint<S>> pts = {probes[0].first, probes[1].second};
      auto sc = derive_structure_constants(loop, pts);
      auto table = yamaguti_constants(loop, sc);
      geom_ = Geometry{loop, std::move(sc), std::move(table)};
    }
    return *geom_;
  }

  const StructureConstants<S>& algebra_constants() {
    if (external_constants_) return *external_constants_;
    return geometry().constants;
  }

  ChartPoint<S> point_at(SampleRng& rng, int index) {
    if (index == 0) return chart_origin<S>();
    return sample_chart_point<S>(rng);
  }

  int tuples_or(int fallback) const { return cfg_.tuples > 0 ? cfg_.tuples : fallback; }

  void run_gle(SuiteReport& rep, Accum& acc) {
    auto& geo = geometry();
    SampleRng rng(cfg_.seed);
    for (int idx = 0; idx < cfg_.points; ++idx) {
      for (;;) {
        const auto g = point_at(rng, idx);
        const auto h = point_at(rng, idx);
        try {
          const auto defects = gle_defect(geo.loop, g, h);
          acc.add("gle_a", idx, mat_max_abs(defects[0]));
          acc.add("gle_b", idx, mat_max_abs(defects[1]));
          acc.add("gle_c", idx, mat_max_abs(defects[2]));
          for (const auto& p : {g, h, geo.loop.mul(g, h)}) {
            const auto f = aux_frames(geo.loop, p);
            S worst = S(0);
            for (int s = 0; s < loop_dim; ++s)
              for (int j = 0; j < loop_dim; ++j) {
                S a = abs_value(S(f.u[s][j] + f.v[s][j] + f.w[s][j]));
                if (worst < a) worst = a;
              }
            acc.add("frame_constraint", idx, worst);
          }
          break;
        } catch (const chart_singularity_error&) {
          ++rep.resampled;
        }
      }
    }
  }

  void run_mc(SuiteReport& rep, Accum& acc) {
    auto& geo = geometry();
    SampleRng rng(cfg_.seed);
    const int tuples = tuples_or(2);
    static const char* names[6] = {"mc_ll", "mc_rr", "mc_lr_symmetry",
                                   "yam_ll", "yam_lr", "yam_rr"};
    for (int idx = 0; idx < cfg_.points; ++idx) {
      for (;;) {
        const auto g = point_at(rng, idx);
        try {
          for (int t = 0; t < tuples; ++t) {
            const auto x = sample_tangent<S>(rng);
            const auto y = sample_tangent<S>(rng);
            const auto defects = maurer_cartan_defect(geo.loop, geo.constants, g, x, y);
            for (int d = 0; d < 6; ++d) acc.add(names[d], idx, max_abs(defects[d]));
          }
          break;
        } catch (const chart_singularity_error&) {
          ++rep.resampled;
        }
      }
    }
    // degenerate collapse: x = y makes every bracket in the first relation
    // antisymmetric-collapse to zero defect
    const auto x = sample_tangent<S>(rng);
    const auto defects =
        maurer_cartan_defect(geo.loop, geo.constants, point_at(rng, 1), x, x);
    acc.add("mc_equal_arguments", -1, max_abs(defects[0]));
  }

  void run_yamaguti(SuiteReport& rep, Accum& acc) {
    auto& geo = geometry();
    SampleRng rng(cfg_.seed);
    const int tuples = tuples_or(2);
    const S third = S(1) / S(3);
    const S two_thirds = S(2) / S(3);
    const S half = S(1) / S(2);
    for (int idx = 0; idx < cfg_.points; ++idx) {
      for (;;) {
        const auto g = point_at(rng, idx);
        try {
          for (int t = 0; t < tuples; ++t) {
            const auto x = sample_tangent<S>(rng);
            const auto y = sample_tangent<S>(rng);
            const auto yxy = yamagutian_field(geo.loop, g, x, y);
            const auto yyx = yamagutian_field(geo.loop, g, y, x);
            acc.add("yamagutian_antisymmetry", idx, max_abs(yxy + yyx));

            const auto c = tangent_bracket(geo.constants, x, y);
            const auto frames = aux_frames(geo.loop, g);
            const auto lc = translation_field(frames, Trans::L, c);
            const auto rc = translation_field(frames, Trans::R, c);
            const auto ll = eval_at(commutator(translation(geo.loop, Trans::L, x),
                                               translation(geo.loop, Trans::L, y)),
                                    g);
            const auto rr = eval_at(commutator(translation(geo.loop, Trans::R, x),
                                               translation(geo.loop, Trans::R, y)),
                                    g);
            const auto lr = eval_at(commutator(translation(geo.loop, Trans::L, x),
                                               translation(geo.loop, Trans::R, y)),
                                    g);
            acc.add("yamagutian_solved_ll", idx,
                    max_abs(half * (ll - third * lc - two_thirds * rc) - yxy));
            acc.add("yamagutian_solved_lr", idx,
                    max_abs(third * lc - third * rc - lr - yxy));
            acc.add("yamagutian_solved_rr", idx,
                    max_abs(half * (rr + two_thirds * lc + third * rc) - yxy));

            // contraction of the Yamaguti functions is minus the field value
            const auto yf = yamaguti_functions(geo.loop, g);
            FieldValue<S> contr{g, {}};
            contr.coeffs.fill(S(0));
            for (int s = 0; s < loop_dim; ++s)
              for (int j = 0; j < loop_dim; ++j)
                for (int k = 0; k < loop_dim; ++k)
                  contr.coeffs[s] += yf[s][j][k] * x[j] * y[k];
            acc.add("functions_field_relation", idx, max_abs(contr + yxy));
          }
          break;
        } catch (const chart_singularity_error&) {
          ++rep.resampled;
        }
      }
    }

    // constants-level checks, once
    bool routes_ok = true;
    try {
      (void)yamaguti_constants(geo.loop, geo.constants);
    } catch (const convention_error&) {
      routes_ok = false;
    }
    acc.add("constants_two_routes", -1, routes_ok ? S(0) : S(1));
    const auto cross = ternary_table(geo.constants);
    S worst = S(0);
    for (size_t i = 0; i < geo.table.y.size(); ++i) {
      S d = abs_value(S(geo.table.y[i] - cross.y[i]));
      if (worst < d) worst = d;
    }
    acc.add("constants_cross_module", -1, worst);
    worst = S(0);
    for (int i = 0; i < loop_dim; ++i)
      for (int j = 0; j < loop_dim; ++j)
        for (int k = 0; k < loop_dim; ++k)
          for (int l = 0; l < loop_dim; ++l) {
            S d = abs_value(S(geo.table.at(i, j, k, l) + geo.table.at(i, k, j, l)));
            if (worst < d) worst = d;
          }
    acc.add("constants_antisymmetry", -1, worst);
  }

  void run_integrability(SuiteReport& rep, Accum& acc) {
    auto& geo = geometry();
    SampleRng rng(cfg_.seed);
    for (int idx = 0; idx < cfg_.points; ++idx) {
      for (;;) {
        const auto g = point_at(rng, idx);
        const auto h = point_at(rng, idx);
        try {
          acc.add("integrability", idx, max_abs(integrability_defect(geo.loop, g, h)));
          acc.add("integrability_printed_variant", idx,
                  max_abs(integrability_defect_printed_variant(geo.loop, g, h)),
                  /*informational=*/true);
          acc.add("linearization", idx,
                  max_abs(yamaguti_linearization_defect(geo.loop, geo.constants, g)));
          acc.add("linearization_printed_variant", idx,
                  max_abs(yamaguti_linearization_defect_printed_variant(
                      geo.loop, geo.constants, g)),
                  /*informational=*/true);
          break;
        } catch (const chart_singularity_error&) {
          ++rep.resampled;
        }
      }
    }
  }

  void run_reductivity(SuiteReport& rep, Accum& acc) {
    auto& geo = geometry();
    SampleRng rng(cfg_.seed);
    const int tuples = tuples_or(5);
    static const char* names[6] = {"reductivity_l",     "reductivity_r",
                                   "reductivity_m",     "reductivity_lplus",
                                   "reductivity_rplus", "reductivity_mplus"};
    for (int idx = 0; idx < cfg_.points; ++idx) {
      for (;;) {
        const auto g = point_at(rng, idx);
        try {
          for (int t = 0; t < tuples; ++t) {
            const auto x = sample_tangent<S>(rng);
            const auto y = sample_tangent<S>(rng);
            const auto z = sample_tangent<S>(rng);
            const auto defects = reductivity_defect(geo.loop, geo.table, g, x, y, z);
            for (int d = 0; d < 6; ++d) acc.add(names[d], idx, max_abs(defects[d]));
            acc.add("reductivity_m_sum", idx,
                    max_abs(defects[2] - defects[0] - defects[1]));
          }
          break;
        } catch (const chart_singularity_error&) {
          ++rep.resampled;
        }
      }
    }
  }

  void run_prop11(SuiteReport& rep, Accum& acc) {
    auto& geo = geometry();
    SampleRng rng(cfg_.seed);
    const int tuples = tuples_or(2);
    static const char* names[3] = {"pair_mplus", "pair_rplus", "pair_lplus"};
    for (int idx = 0; idx < cfg_.points; ++idx) {
      for (;;) {
        const auto g = point_at(rng, idx);
        try {
          for (int t = 0; t < tuples; ++t) {
            const auto x = sample_tangent<S>(rng);
            const auto y = sample_tangent<S>(rng);
            const auto defects = conjugate_pair_defect(geo.loop, geo.constants, g, x, y);
            for (int d = 0; d < 3; ++d) acc.add(names[d], idx, max_abs(defects[d]));
          }
          const auto f = aux_frames(geo.loop, g);
          const auto cf = conjugated_frames(f);
          S worst_inv = S(0), worst_sum = S(0);
          for (int s = 0; s < loop_dim; ++s)
            for (int j = 0; j < loop_dim; ++j) {
              const S inv_l = S(3) * f.u[s][j] - (cf.mplus[s][j] - cf.rplus[s][j]);
              const S inv_r = S(3) * f.v[s][j] - (cf.lplus[s][j] - cf.mplus[s][j]);
              const S inv_m = S(3) * f.w[s][j] - (cf.rplus[s][j] - cf.lplus[s][j]);
              for (const S& v : {inv_l, inv_r, inv_m}) {
                S a = abs_value(v);
                if (worst_inv < a) worst_inv = a;
              }
              S a = abs_value(S(cf.lplus[s][j] + cf.rplus[s][j] + cf.mplus[s][j]));
              if (worst_sum < a) worst_sum = a;
            }
          acc.add("inverse_conjugation", idx, worst_inv);
          acc.add("conjugate_constraint", idx, worst_sum);
          break;
        } catch (const chart_singularity_error&) {
          ++rep.resampled;
        }
      }
    }
  }

  void run_hidden(SuiteReport& rep, Accum& acc) {
    auto& geo = geometry();
    SampleRng rng(cfg_.seed);
    const int tuples = tuples_or(5);
    for (int idx = 0; idx < cfg_.points; ++idx) {
      for (;;) {
        const auto g = point_at(rng, idx);
        try {
          for (int t = 0; t < tuples; ++t) {
            const auto x = sample_tangent<S>(rng);
            const auto y = sample_tangent<S>(rng);
            const auto z = sample_tangent<S>(rng);
            const auto w = sample_tangent<S>(rng);
            const auto direct = hidden_associativity_defect(
                geo.loop, geo.constants, geo.table, g, x, y, z, w, YamRoute::direct);
            acc.add("hidden_associativity", idx, max_abs(direct));
            if (t == 0) {
              // triality probe: the three conjugate realizations coincide
              S worst = S(0);
              for (YamRoute route :
                   {YamRoute::lplus, YamRoute::rplus, YamRoute::mplus}) {
                const auto via = hidden_associativity_defect(
                    geo.loop, geo.constants, geo.table, g, x, y, z, w, route);
                S d = max_abs(via - direct);
                if (worst < d) worst = d;
              }
              acc.add("hidden_triality_agreement", idx, worst);
            }
          }
          break;
        } catch (const chart_singularity_error&) {
          ++rep.resampled;
        }
      }
    }
    // operator shadow on random algebra quadruples
    const auto& sc = geo.constants;
    for (int idx = 0; idx < cfg_.points; ++idx) {
      const auto x = to_algebra(sample_tangent<S>(rng));
      const auto y = to_algebra(sample_tangent<S>(rng));
      const auto z = to_algebra(sample_tangent<S>(rng));
      const auto w = to_algebra(sample_tangent<S>(rng));
      const auto defect = rep_commutator_defect(sc, x, y, z, w);
      S worst = S(0);
      for (const auto& v : defect.m) {
        S a = abs_value(v);
        if (worst < a) worst = a;
      }
      acc.add("rep_commutation", idx, worst);
    }
  }

  void run_sy(Accum& acc) {
    const auto& sc = algebra_constants();
    const auto m = scan_maltsev(sc);
    acc.add("maltsev_exhaustive", m.witness_flat, m.max_defect, false, m.witness);
    const auto s = scan_sagle_yamaguti(sc);
    acc.add("sagle_yamaguti_exhaustive", s.witness_flat, s.max_defect, false, s.witness);
  }

  SuiteConfig cfg_;
  std::optional<Geometry> geom_;
  std::optional<StructureConstants<S>> external_constants_;
};

/// Exhaustive algebra-level checks on an arbitrary constants table, for the
/// `algebra` command. Valid check names: maltsev, sy, jacobi, rep.
template <class S>
SuiteReport run_algebra_checks(const StructureConstants<S>& sc,
                               const std::vector<std::string>& checks,
                               uint64_t seed = 1) {
  SuiteReport rep;
  rep.suite = "algebra";
  rep.mode = ScalarMode<S>::name;
  rep.seed = seed;
  rep.points = 0;
  const auto t0 = std::chrono::steady_clock::now();
  auto record = [&](const std::string& identity, const ScanOutcome<S>& out) {
    const bool ok = out.clean();
    rep.identities.push_back({identity, ok, false, ScalarMode<S>::render(out.max_defect),
                              ok ? -1 : out.witness_flat, ok ? "" : out.witness});
    rep.records.push_back({rep.suite, identity, out.witness_flat,
                           ScalarMode<S>::render(out.max_defect), ok ? "pass" : "fail"});
  };
  for (const auto& check : checks) {
    if (check == "maltsev")
      record("maltsev_exhaustive", scan_maltsev(sc));
    else if (check == "sy")
      record("sagle_yamaguti_exhaustive", scan_sagle_yamaguti(sc));
    else if (check == "jacobi")
      record("jacobi_exhaustive", scan_jacobi(sc));
    else if (check == "rep")
      record("rep_commutation", scan_rep_commutation(sc, 50, seed));
    else
      throw std::invalid_argument("unknown algebra check: " + check);
  }
  rep.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace octoloop
