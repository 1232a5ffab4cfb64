#pragma once

#include <array>
#include <vector>
#include <stdexcept>

#include "octoloop/algebra.hpp"
#include "octoloop/chart.hpp"

namespace octoloop {

struct convention_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class S>
using Mat = std::array<std::array<S, loop_dim>, loop_dim>;  // [row s][col j]

template <class S>
Mat<S> mat_zero() {
  Mat<S> m;
  for (auto& row : m) row.fill(S(0));
  return m;
}

template <class S>
S mat_max_abs(const Mat<S>& m) {
  S r = S(0);
  for (const auto& row : m)
    for (const auto& x : row) {
      S a = abs_value(x);
      if (r < a) r = a;
    }
  return r;
}

namespace detail {

// Columns of the two first-order frames at a jet point, extracted with one
// fresh tag per column:
//   u^s_j(g) = d(h g)^s / dh^j at h = 0,   v^s_j(g) = d(g h)^s / dh^j at h = 0
// (roles exchanged when the loop is marked swapped).
template <class S>
void frame_columns(const LocalLoop<S>& loop, const Coords<Jet<S>>& g, int tag,
                   Mat<Jet<S>>& u, Mat<Jet<S>>& v) {
  Jet<S>::check_tag(tag);
  const auto origin = lift_point(chart_origin<S>());
  for (int j = 0; j < loop_dim; ++j) {
    const auto h = seed_coordinate(origin, tag, j);
    const auto hg = loop.mul(h, g);
    const auto gh = loop.mul(g, h);
    for (int s = 0; s < loop_dim; ++s) {
      auto du = hg[s].extracted_from_tag(tag);
      auto dv = gh[s].extracted_from_tag(tag);
      if (loop.swapped_frames) std::swap(du, dv);
      u[s][j] = du;
      v[s][j] = dv;
    }
  }
}

}  // namespace detail

/// The auxiliary frames u, v, w at a chart point, with w = -u - v. At the
/// origin u = v = id and w = -2 id.
template <class S>
struct AuxFrames {
  ChartPoint<S> point;
  Mat<S> u, v, w;
};

template <class S>
AuxFrames<S> aux_frames(const LocalLoop<S>& loop, const ChartPoint<S>& g) {
  Mat<Jet<S>> uj, vj;
  detail::frame_columns(loop, lift_point(g), 0, uj, vj);
  AuxFrames<S> f{g, {}, {}, {}};
  for (int s = 0; s < loop_dim; ++s)
    for (int j = 0; j < loop_dim; ++j) {
      f.u[s][j] = uj[s][j].value();
      f.v[s][j] = vj[s][j].value();
      f.w[s][j] = -f.u[s][j] - f.v[s][j];
    }
  return f;
}

/// Triality-conjugated frames: the coordinate matrices of
/// Lplus = R - M, Rplus = M - L, Mplus = L - R.
template <class S>
struct ConjugatedFrames {
  ChartPoint<S> point;
  Mat<S> lplus, rplus, mplus;
};

template <class S>
ConjugatedFrames<S> conjugated_frames(const AuxFrames<S>& f) {
  ConjugatedFrames<S> c{f.point, {}, {}, {}};
  for (int s = 0; s < loop_dim; ++s)
    for (int j = 0; j < loop_dim; ++j) {
      c.lplus[s][j] = f.v[s][j] - f.w[s][j];
      c.rplus[s][j] = f.w[s][j] - f.u[s][j];
      c.mplus[s][j] = f.u[s][j] - f.v[s][j];
    }
  return c;
}

/// Jacobian of the product map with respect to the first argument,
/// D[i][s] = d(gh)^i / dg^s, by single-tag jets.
template <class S>
Mat<S> product_jacobian_first(const LocalLoop<S>& loop, const ChartPoint<S>& g,
                              const ChartPoint<S>& h) {
  Mat<S> d;
  const auto hj = lift_point(h);
  for (int s = 0; s < loop_dim; ++s) {
    const auto gs = seed_coordinate(lift_point(g), 0, s);
    const auto prod = loop.mul(gs, hj);
    for (int i = 0; i < loop_dim; ++i) d[i][s] = prod[i].coeff(1);
  }
  return d;
}

template <class S>
Mat<S> product_jacobian_second(const LocalLoop<S>& loop, const ChartPoint<S>& g,
                               const ChartPoint<S>& h) {
  Mat<S> d;
  const auto gj = lift_point(g);
  for (int s = 0; s < loop_dim; ++s) {
    const auto hs = seed_coordinate(lift_point(h), 0, s);
    const auto prod = loop.mul(gj, hs);
    for (int i = 0; i < loop_dim; ++i) d[i][s] = prod[i].coeff(1);
  }
  return d;
}

/// Defect matrices of the three generalized Lie equations
///   w(g) d_g(gh) + u(h) d_h(gh) + u(gh) = 0
///   v(g) d_g(gh) + w(h) d_h(gh) + v(gh) = 0
///   u(g) d_g(gh) + v(h) d_h(gh) + w(gh) = 0
/// in the fixed frame orientation; all three vanish identically.
template <class S>
std::array<Mat<S>, 3> gle_defect(const LocalLoop<S>& loop, const ChartPoint<S>& g,
                                 const ChartPoint<S>& h) {
  const auto fg = aux_frames(loop, g);
  const auto fh = aux_frames(loop, h);
  const auto fgh = aux_frames(loop, loop.mul(g, h));
  const auto dg = product_jacobian_first(loop, g, h);
  const auto dh = product_jacobian_second(loop, g, h);

  auto contract = [&](const Mat<S>& frame_g, const Mat<S>& frame_h,
                      const Mat<S>& tail) {
    Mat<S> defect = mat_zero<S>();
    for (int i = 0; i < loop_dim; ++i)
      for (int j = 0; j < loop_dim; ++j) {
        S acc = tail[i][j];
        for (int s = 0; s < loop_dim; ++s)
          acc += frame_g[s][j] * dg[i][s] + frame_h[s][j] * dh[i][s];
        defect[i][j] = acc;
      }
    return defect;
  };

  return {contract(fg.w, fh.u, fgh.u), contract(fg.v, fh.w, fgh.v),
          contract(fg.u, fh.v, fgh.w)};
}

/// Validates the frame orientation against the generalized Lie equations at
/// the given probe pairs; tries the exchanged assignment if the standard one
/// fails, and aborts when neither satisfies them.
template <class S>
LocalLoop<S> calibrate_frames(
    const std::vector<std::pair<ChartPoint<S>, ChartPoint<S>>>& probes) {
  for (bool swapped : {false, true}) {
    LocalLoop<S> loop;
    loop.swapped_frames = swapped;
    bool ok = true;
    for (const auto& [g, h] : probes) {
      for (const auto& defect : gle_defect(loop, g, h))
        if (!ScalarMode<S>::negligible(mat_max_abs(defect))) ok = false;
      if (!ok) break;
    }
    if (ok) return loop;
  }
  throw convention_error(
      "frame calibration: generalized Lie equations fail in both orientations");
}

}  // namespace octoloop
