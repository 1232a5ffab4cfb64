#pragma once

#include <array>

#include "octoloop/fields.hpp"

namespace octoloop {

template <class S>
using Tensor3 = std::array<Mat<S>, loop_dim>;  // [a][b][c]

template <class S>
using Tensor4 = std::array<Tensor3<S>, loop_dim>;  // [a][b][c][d]

template <class S>
Tensor3<S> tensor3_zero() {
  Tensor3<S> t;
  for (auto& m : t) m = mat_zero<S>();
  return t;
}

template <class S>
S max_abs(const Tensor3<S>& t) {
  S r = S(0);
  for (const auto& m : t) {
    S a = mat_max_abs(m);
    if (r < a) r = a;
  }
  return r;
}

namespace detail {

template <class S>
struct JetFrameDerivs {
  Mat<Jet<S>> u, v;          // u^s_j, v^s_j
  Tensor3<Jet<S>> du, dv;    // du[s][j][p] = d u^s_j / d g^p
};

template <class S>
JetFrameDerivs<S> frames_and_derivs(const LocalLoop<S>& loop,
                                    const Coords<Jet<S>>& g, int t) {
  JetFrameDerivs<S> fd;
  frame_columns(loop, g, t, fd.u, fd.v);
  for (int p = 0; p < loop_dim; ++p) {
    const auto gp = seed_coordinate(g, t, p);
    Mat<Jet<S>> up, vp;
    frame_columns(loop, gp, t + 1, up, vp);
    for (int s = 0; s < loop_dim; ++s)
      for (int j = 0; j < loop_dim; ++j) {
        fd.du[s][j][p] = up[s][j].extracted_from_tag(t);
        fd.dv[s][j][p] = vp[s][j].extracted_from_tag(t);
      }
  }
  return fd;
}

// a2^s_jk = a^p_k d a^s_j / d g^p  -  a^p_j d a^s_k / d g^p
template <class S>
Tensor3<Jet<S>> frame_curl(const Mat<Jet<S>>& a, const Tensor3<Jet<S>>& da) {
  Tensor3<Jet<S>> r;
  for (int s = 0; s < loop_dim; ++s)
    for (int j = 0; j < loop_dim; ++j) {
      r[s][j][j] = Jet<S>(0);
      for (int k = j + 1; k < loop_dim; ++k) {
        Jet<S> acc;
        for (int p = 0; p < loop_dim; ++p)
          acc += a[p][k] * da[s][j][p] - a[p][j] * da[s][k][p];
        r[s][j][k] = acc;
        r[s][k][j] = -acc;
      }
    }
  return r;
}

template <class S>
struct JetSecondaryAux {
  Tensor3<Jet<S>> u2, v2, w2;
};

template <class S>
JetSecondaryAux<S> secondary_aux_jets(const LocalLoop<S>& loop,
                                      const Coords<Jet<S>>& g, int t) {
  const auto fd = frames_and_derivs(loop, g, t);
  Mat<Jet<S>> w;
  Tensor3<Jet<S>> dw;
  for (int s = 0; s < loop_dim; ++s)
    for (int j = 0; j < loop_dim; ++j) {
      w[s][j] = -fd.u[s][j] - fd.v[s][j];
      for (int p = 0; p < loop_dim; ++p)
        dw[s][j][p] = -fd.du[s][j][p] - fd.dv[s][j][p];
    }
  return {frame_curl(fd.u, fd.du), frame_curl(fd.v, fd.dv), frame_curl(w, dw)};
}

template <class S>
Tensor3<Jet<S>> yamaguti_functions_jets(const LocalLoop<S>& loop,
                                        const Coords<Jet<S>>& g, int t) {
  const auto sec = secondary_aux_jets(loop, g, t);
  const Jet<S> sixth = Jet<S>(S(1) / S(6));
  Tensor3<Jet<S>> y;
  for (int s = 0; s < loop_dim; ++s)
    for (int j = 0; j < loop_dim; ++j)
      for (int k = 0; k < loop_dim; ++k)
        y[s][j][k] = sixth * (sec.u2[s][j][k] + sec.v2[s][j][k] + sec.w2[s][j][k]);
  return y;
}

template <class S>
Tensor3<S> tensor3_values(const Tensor3<Jet<S>>& t) {
  Tensor3<S> r;
  for (int a = 0; a < loop_dim; ++a)
    for (int b = 0; b < loop_dim; ++b)
      for (int c = 0; c < loop_dim; ++c) r[a][b][c] = t[a][b][c].value();
  return r;
}

}  // namespace detail

/// Secondary auxiliary functions u^s_jk, v^s_jk, w^s_jk at a point, each
/// antisymmetric in (j,k).
template <class S>
struct SecondaryAux {
  ChartPoint<S> point;
  Tensor3<S> u2, v2, w2;
};

template <class S>
SecondaryAux<S> secondary_aux(const LocalLoop<S>& loop, const ChartPoint<S>& g) {
  const auto jets = detail::secondary_aux_jets(loop, lift_point(g), 0);
  return {g, detail::tensor3_values(jets.u2), detail::tensor3_values(jets.v2),
          detail::tensor3_values(jets.w2)};
}

/// Yamaguti functions Y^s_jk = (u^s_jk + v^s_jk + w^s_jk) / 6.
template <class S>
Tensor3<S> yamaguti_functions(const LocalLoop<S>& loop, const ChartPoint<S>& g) {
  return detail::tensor3_values(detail::yamaguti_functions_jets(loop, lift_point(g), 0));
}

/// Associator coefficient functions l^i_jk(g), the components of
/// [L_ej, R_ek]; antisymmetric in (j,k) and vanishing at the origin.
template <class S>
Tensor3<S> associator_functions(const LocalLoop<S>& loop, const ChartPoint<S>& g) {
  Tensor3<S> l = tensor3_zero<S>();
  for (int j = 0; j < loop_dim; ++j)
    for (int k = 0; k < loop_dim; ++k) {
      if (j == k) continue;
      Coords<S> ej = chart_origin<S>(), ek = chart_origin<S>();
      ej[j] = S(1);
      ek[k] = S(1);
      const auto fv = eval_at(commutator(translation(loop, Trans::L, ej),
                                         translation(loop, Trans::R, ek)),
                              g);
      for (int i = 0; i < loop_dim; ++i) l[i][j][k] = fv.coeffs[i];
    }
  return l;
}

/// Linearization l^i_jkl of the associator functions at the origin,
/// l^i_jk(g) = l^i_jkl g^l + O(g^2).
template <class S>
Tensor4<S> associator_constants(const LocalLoop<S>& loop) {
  Tensor4<S> l4;
  for (auto& t : l4) t = tensor3_zero<S>();
  const auto origin = lift_point(chart_origin<S>());
  for (int j = 0; j < loop_dim; ++j)
    for (int k = 0; k < loop_dim; ++k) {
      if (j == k) continue;
      Coords<S> ej = chart_origin<S>(), ek = chart_origin<S>();
      ej[j] = S(1);
      ek[k] = S(1);
      const auto field = commutator(translation(loop, Trans::L, ej),
                                    translation(loop, Trans::R, ek));
      for (int l = 0; l < loop_dim; ++l) {
        const auto seeded = seed_coordinate(origin, 0, l);
        const auto v = field.eval(seeded, 1);
        for (int i = 0; i < loop_dim; ++i)
          l4[i][j][k][l] = v[i].extracted_from_tag(0).value();
      }
    }
  return l4;
}

/// Associator data at a point: the functions l^i_jk(g) together with the
/// origin linearization l^i_jkl.
template <class S>
struct AssociatorCoeffs {
  ChartPoint<S> point;
  Tensor3<S> functions;
  Tensor4<S> constants;
};

template <class S>
AssociatorCoeffs<S> associator_coeffs(const LocalLoop<S>& loop, const ChartPoint<S>& g) {
  return {g, associator_functions(loop, g), associator_constants(loop)};
}

/// Defect of the integrability relation
///   Y^s_jk(g) d(gh)^i/dg^s + Y^s_jk(h) d(gh)^i/dh^s - Y^i_jk(gh),
/// with the derivative in the second term taken in h.
template <class S>
Tensor3<S> integrability_defect(const LocalLoop<S>& loop, const ChartPoint<S>& g,
                                const ChartPoint<S>& h) {
  const auto yg = yamaguti_functions(loop, g);
  const auto yh = yamaguti_functions(loop, h);
  const auto ygh = yamaguti_functions(loop, loop.mul(g, h));
  const auto dg = product_jacobian_first(loop, g, h);
  const auto dh = product_jacobian_second(loop, g, h);
  Tensor3<S> defect;
  for (int i = 0; i < loop_dim; ++i)
    for (int j = 0; j < loop_dim; ++j)
      for (int k = 0; k < loop_dim; ++k) {
        S acc = -ygh[i][j][k];
        for (int s = 0; s < loop_dim; ++s)
          acc += yg[s][j][k] * dg[i][s] + yh[s][j][k] * dh[i][s];
        defect[i][j][k] = acc;
      }
  return defect;
}

/// Diagnostic only: the variant with the g-derivative repeated in both
/// terms. Reported, never asserted; it does not vanish.
template <class S>
Tensor3<S> integrability_defect_printed_variant(const LocalLoop<S>& loop,
                                                const ChartPoint<S>& g,
                                                const ChartPoint<S>& h) {
  const auto yg = yamaguti_functions(loop, g);
  const auto yh = yamaguti_functions(loop, h);
  const auto ygh = yamaguti_functions(loop, loop.mul(g, h));
  const auto dg = product_jacobian_first(loop, g, h);
  Tensor3<S> defect;
  for (int i = 0; i < loop_dim; ++i)
    for (int j = 0; j < loop_dim; ++j)
      for (int k = 0; k < loop_dim; ++k) {
        S acc = -ygh[i][j][k];
        for (int s = 0; s < loop_dim; ++s)
          acc += (yg[s][j][k] + yh[s][j][k]) * dg[i][s];
        defect[i][j][k] = acc;
      }
  return defect;
}

/// Defect of the first-order relation between the Yamaguti functions, the
/// associator functions and the tangent constants,
///   Y^i_jk = l^i_jk - (1/3) C^s_jk (u^i_s - v^i_s),
/// in this artifact's bracket orientation.
template <class S>
Tensor3<S> yamaguti_linearization_defect(const LocalLoop<S>& loop,
                                         const StructureConstants<S>& sc,
                                         const ChartPoint<S>& g) {
  const auto y = yamaguti_functions(loop, g);
  const auto l = associator_functions(loop, g);
  const auto f = aux_frames(loop, g);
  const S third = S(1) / S(3);
  Tensor3<S> defect;
  for (int i = 0; i < loop_dim; ++i)
    for (int j = 0; j < loop_dim; ++j)
      for (int k = 0; k < loop_dim; ++k) {
        S acc = y[i][j][k] - l[i][j][k];
        for (int s = 0; s < loop_dim; ++s)
          acc += third * sc.at(s, j, k) * (f.u[i][s] - f.v[i][s]);
        defect[i][j][k] = acc;
      }
  return defect;
}

/// Diagnostic only: the same relation with the opposite sign on the frame
/// term. Reported, never asserted; it does not vanish.
template <class S>
Tensor3<S> yamaguti_linearization_defect_printed_variant(
    const LocalLoop<S>& loop, const StructureConstants<S>& sc, const ChartPoint<S>& g) {
  const auto y = yamaguti_functions(loop, g);
  const auto l = associator_functions(loop, g);
  const auto f = aux_frames(loop, g);
  const S third = S(1) / S(3);
  Tensor3<S> defect;
  for (int i = 0; i < loop_dim; ++i)
    for (int j = 0; j < loop_dim; ++j)
      for (int k = 0; k < loop_dim; ++k) {
        S acc = y[i][j][k] - l[i][j][k];
        for (int s = 0; s < loop_dim; ++s)
          acc -= third * sc.at(s, j, k) * (f.u[i][s] - f.v[i][s]);
        defect[i][j][k] = acc;
      }
  return defect;
}

/// Yamaguti constants Y^i_jkl, computed two independent ways:
///  (a) linearization dY^i_jk/dg^l at the origin, by jets;
///  (b) l^i_jkl + (1/3) C^s_jk C^i_sl.
/// Returns (a) after asserting the routes agree componentwise; disagreement
/// is a convention error.
template <class S>
TernaryTable<S> yamaguti_constants(const LocalLoop<S>& loop,
                                   const StructureConstants<S>& sc) {
  const int n = loop_dim;
  TernaryTable<S> table{n, std::vector<S>(static_cast<size_t>(n) * n * n * n, S(0))};

  const auto origin = lift_point(chart_origin<S>());
  for (int l = 0; l < n; ++l) {
    const auto seeded = seed_coordinate(origin, 0, l);
    const auto y = detail::yamaguti_functions_jets(loop, seeded, 1);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          table.at(i, j, k, l) = y[i][j][k].extracted_from_tag(0).value();
  }

  const auto l4 = associator_constants(loop);
  const S third = S(1) / S(3);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          S rhs = l4[i][j][k][l];
          for (int s = 0; s < n; ++s) rhs += third * sc.at(s, j, k) * sc.at(i, s, l);
          if (!ScalarMode<S>::negligible(table.at(i, j, k, l) - rhs))
            throw convention_error(
                "yamaguti constants: linearization and associator routes disagree");
        }
  return table;
}

/// Which expression realizes the Yamagutian in a composite defect: its
/// definition, or one of the three conjugate-translation identities.
enum class YamRoute { direct, lplus, rplus, mplus };

template <class S>
VecField<S> yamagutian_via(const LocalLoop<S>& loop, const StructureConstants<S>& sc,
                           YamRoute route, const Coords<S>& x, const Coords<S>& y) {
  if (route == YamRoute::direct) return yamagutian(loop, x, y);
  const Trans kind = route == YamRoute::lplus   ? Trans::Lplus
                     : route == YamRoute::rplus ? Trans::Rplus
                                                : Trans::Mplus;
  auto sum = field_sum<S>(
      {commutator(translation(loop, kind, x), translation(loop, kind, y)),
       translation(loop, kind, tangent_bracket(sc, x, y))});
  return field_scale(S(1) / S(6), std::move(sum));
}

/// The Yamagutian evaluated at a point.
template <class S>
FieldValue<S> yamagutian_field(const LocalLoop<S>& loop, const ChartPoint<S>& g,
                               const Coords<S>& x, const Coords<S>& y) {
  return eval_at(yamagutian(loop, x, y), g);
}

/// Defects of the six Maurer-Cartan relations at g: the three bracket
/// forms and the three rewritten through the Yamagutian.
template <class S>
std::array<FieldValue<S>, 6> maurer_cartan_defect(const LocalLoop<S>& loop,
                                                  const StructureConstants<S>& sc,
                                                  const ChartPoint<S>& g,
                                                  const Coords<S>& x, const Coords<S>& y) {
  const auto c = tangent_bracket(sc, x, y);
  const auto ll = eval_at(commutator(translation(loop, Trans::L, x),
                                     translation(loop, Trans::L, y)),
                          g);
  const auto rr = eval_at(commutator(translation(loop, Trans::R, x),
                                     translation(loop, Trans::R, y)),
                          g);
  const auto lr = eval_at(commutator(translation(loop, Trans::L, x),
                                     translation(loop, Trans::R, y)),
                          g);
  const auto rl = eval_at(commutator(translation(loop, Trans::R, x),
                                     translation(loop, Trans::L, y)),
                          g);
  const auto frames = aux_frames(loop, g);
  const auto lc = translation_field(frames, Trans::L, c);
  const auto rc = translation_field(frames, Trans::R, c);
  const auto yam = yamagutian_field(loop, g, x, y);

  const S third = S(1) / S(3);
  const S two_thirds = S(2) / S(3);

  // [L_x,L_y] = L_[x,y] - 2[L_x,R_y]
  auto mc_ll = ll - lc + S(2) * lr;
  // [R_x,R_y] = R_[y,x] - 2[R_x,L_y]
  auto mc_rr = rr + rc + S(2) * rl;
  // [L_x,R_y] = [R_x,L_y]
  auto mc_sym = lr - rl;
  // [L_x,L_y] = 2Y + (1/3)L_[x,y] + (2/3)R_[x,y]
  auto yam_ll = ll - S(2) * yam - third * lc - two_thirds * rc;
  // [L_x,R_y] = -Y + (1/3)L_[x,y] - (1/3)R_[x,y]
  auto yam_lr = lr + yam - third * lc + third * rc;
  // [R_x,R_y] = 2Y - (2/3)L_[x,y] - (1/3)R_[x,y]
  auto yam_rr = rr - S(2) * yam + two_thirds * lc + third * rc;

  return {mc_ll, mc_rr, mc_sym, yam_ll, yam_lr, yam_rr};
}

/// Defects of the six reductivity relations 6[Y(x;y), T_z] = T_[x,y,z]
/// for T in {L, R, M} and their triality conjugates.
template <class S>
std::array<FieldValue<S>, 6> reductivity_defect(const LocalLoop<S>& loop,
                                                const TernaryTable<S>& table,
                                                const ChartPoint<S>& g,
                                                const Coords<S>& x, const Coords<S>& y,
                                                const Coords<S>& z) {
  const auto txyz = to_coords(
      ternary_bracket(table, to_algebra(x), to_algebra(y), to_algebra(z)));
  const auto yam = yamagutian(loop, x, y);
  std::array<FieldValue<S>, 6> out;
  const Trans kinds[6] = {Trans::L,     Trans::R,     Trans::M,
                          Trans::Lplus, Trans::Rplus, Trans::Mplus};
  for (int t = 0; t < 6; ++t) {
    const auto lhs = eval_at(commutator(yam, translation(loop, kinds[t], z)), g);
    const auto rhs = eval_at(translation(loop, kinds[t], txyz), g);
    out[t] = S(6) * lhs - rhs;
  }
  return out;
}

/// Defects of the Moufang-Mal'tsev pair relations
///   6Y(x;y) = [T+_x, T+_y] + T+_[x,y]  for T+ in {M+, R+, L+}.
template <class S>
std::array<FieldValue<S>, 3> conjugate_pair_defect(const LocalLoop<S>& loop,
                                                   const StructureConstants<S>& sc,
                                                   const ChartPoint<S>& g,
                                                   const Coords<S>& x, const Coords<S>& y) {
  const auto yam6 = S(6) * yamagutian_field(loop, g, x, y);
  const auto c = tangent_bracket(sc, x, y);
  const auto frames = aux_frames(loop, g);
  std::array<FieldValue<S>, 3> out;
  const Trans kinds[3] = {Trans::Mplus, Trans::Rplus, Trans::Lplus};
  for (int t = 0; t < 3; ++t) {
    const auto comm = eval_at(commutator(translation(loop, kinds[t], x),
                                         translation(loop, kinds[t], y)),
                              g);
    const auto tail = translation_field(frames, kinds[t], c);
    out[t] = yam6 - comm - tail;
  }
  return out;
}

/// Defect of the hidden-associativity commutation relation
///   6[Y(x;y), Y(z;w)] = Y([x,y,z]; w) + Y(z; [x,y,w]),
/// with the Yamagutian realized through the chosen route.
template <class S>
FieldValue<S> hidden_associativity_defect(const LocalLoop<S>& loop,
                                          const StructureConstants<S>& sc,
                                          const TernaryTable<S>& table,
                                          const ChartPoint<S>& g, const Coords<S>& x,
                                          const Coords<S>& y, const Coords<S>& z,
                                          const Coords<S>& w,
                                          YamRoute route = YamRoute::direct) {
  const auto xyz = to_coords(
      ternary_bracket(table, to_algebra(x), to_algebra(y), to_algebra(z)));
  const auto xyw = to_coords(
      ternary_bracket(table, to_algebra(x), to_algebra(y), to_algebra(w)));
  const auto yam_xy = yamagutian_via(loop, sc, route, x, y);
  const auto yam_zw = yamagutian_via(loop, sc, route, z, w);
  const auto lhs = eval_at(commutator(yam_xy, yam_zw), g);
  const auto r1 = eval_at(yamagutian_via(loop, sc, route, xyz, w), g);
  const auto r2 = eval_at(yamagutian_via(loop, sc, route, z, xyw), g);
  return S(6) * lhs - r1 - r2;
}

}  // namespace octoloop
