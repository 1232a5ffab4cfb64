#pragma once

#include <functional>
#include <type_traits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "octoloop/frames.hpp"

namespace octoloop {

/// The six infinitesimal translation kinds: left, right, middle, and their
/// triality conjugates Lplus = R - M, Rplus = M - L, Mplus = L - R.
enum class Trans { L, R, M, Lplus, Rplus, Mplus };

/// A vector field's components at one chart point.
template <class S>
struct FieldValue {
  ChartPoint<S> point;
  Coords<S> coeffs;
};

template <class S>
void require_same_point(const FieldValue<S>& a, const FieldValue<S>& b) {
  if (a.point != b.point)
    throw std::invalid_argument("field values attached to different points");
}

template <class S>
FieldValue<S> operator+(const FieldValue<S>& a, const FieldValue<S>& b) {
  require_same_point(a, b);
  FieldValue<S> r = a;
  for (int i = 0; i < loop_dim; ++i) r.coeffs[i] += b.coeffs[i];
  return r;
}

template <class S>
FieldValue<S> operator-(const FieldValue<S>& a, const FieldValue<S>& b) {
  require_same_point(a, b);
  FieldValue<S> r = a;
  for (int i = 0; i < loop_dim; ++i) r.coeffs[i] -= b.coeffs[i];
  return r;
}

template <class S>
FieldValue<S> operator*(const S& c, const FieldValue<S>& a) {
  FieldValue<S> r = a;
  for (int i = 0; i < loop_dim; ++i) r.coeffs[i] = c * r.coeffs[i];
  return r;
}

template <class S>
S max_abs(const FieldValue<S>& v) {
  S m = S(0);
  for (const auto& x : v.coeffs) {
    S a = abs_value(x);
    if (m < a) m = a;
  }
  return m;
}

/// Pointwise translation value from precomputed frames: coefficients
/// x^j u^s_j(g) (L), x^j v^s_j(g) (R), x^j w^s_j(g) (M), and the
/// conjugated combinations.
template <class S>
FieldValue<S> translation_field(const AuxFrames<S>& f, Trans kind,
                                const Coords<S>& x) {
  auto contract = [&](const Mat<S>& frame) {
    Coords<S> r;
    for (int s = 0; s < loop_dim; ++s) {
      S acc = S(0);
      for (int j = 0; j < loop_dim; ++j)
        if (!is_zero(x[j])) acc += x[j] * frame[s][j];
      r[s] = acc;
    }
    return r;
  };
  FieldValue<S> out{f.point, {}};
  switch (kind) {
    case Trans::L: out.coeffs = contract(f.u); break;
    case Trans::R: out.coeffs = contract(f.v); break;
    case Trans::M: out.coeffs = contract(f.w); break;
    case Trans::Lplus: {
      const auto cf = conjugated_frames(f);
      out.coeffs = contract(cf.lplus);
      break;
    }
    case Trans::Rplus: {
      const auto cf = conjugated_frames(f);
      out.coeffs = contract(cf.rplus);
      break;
    }
    case Trans::Mplus: {
      const auto cf = conjugated_frames(f);
      out.coeffs = contract(cf.mplus);
      break;
    }
  }
  return out;
}

/// A vector field evaluable at jet-valued chart points. `eval(g, t)` may use
/// tags t, t+1, ... internally for its own derivatives and must return
/// components carrying only the tags already present in g. Nesting beyond
/// the three available tags throws tag_budget_error.
template <class S>
struct VecField {
  using JetPoint = Coords<Jet<S>>;
  std::function<JetPoint(const JetPoint&, int)> eval;
};

namespace detail {

template <class S>
Coords<Jet<S>> seeded_origin_direction(const Coords<S>& x, int tag) {
  Jet<S>::check_tag(tag);
  Coords<Jet<S>> h;
  for (int i = 0; i < loop_dim; ++i)
    h[i] = Jet<S>::constant(x[i]).shifted_into_tag(tag);
  return h;
}

// L_x(g): the t-coefficient of m(t x, g); R_x(g): that of m(g, t x).
template <class S>
Coords<Jet<S>> eval_left(const LocalLoop<S>& loop, const Coords<S>& x,
                         const Coords<Jet<S>>& g, int t) {
  const auto h = seeded_origin_direction(x, t);
  const auto prod = loop.swapped_frames ? loop.mul(g, h) : loop.mul(h, g);
  Coords<Jet<S>> r;
  for (int i = 0; i < loop_dim; ++i) r[i] = prod[i].extracted_from_tag(t);
  return r;
}

template <class S>
Coords<Jet<S>> eval_right(const LocalLoop<S>& loop, const Coords<S>& x,
                          const Coords<Jet<S>>& g, int t) {
  const auto h = seeded_origin_direction(x, t);
  const auto prod = loop.swapped_frames ? loop.mul(h, g) : loop.mul(g, h);
  Coords<Jet<S>> r;
  for (int i = 0; i < loop_dim; ++i) r[i] = prod[i].extracted_from_tag(t);
  return r;
}

}  // namespace detail

/// The translation vector field of `kind` with tangent argument x.
template <class S>
VecField<S> translation(LocalLoop<S> loop, Trans kind, Coords<S> x) {
  return {[loop, kind, x = std::move(x)](const Coords<Jet<S>>& g, int t) {
    using detail::eval_left;
    using detail::eval_right;
    Coords<Jet<S>> r;
    switch (kind) {
      case Trans::L: return eval_left(loop, x, g, t);
      case Trans::R: return eval_right(loop, x, g, t);
      case Trans::M: {
        const auto l = eval_left(loop, x, g, t);
        const auto rr = eval_right(loop, x, g, t);
        for (int i = 0; i < loop_dim; ++i) r[i] = -l[i] - rr[i];
        return r;
      }
      case Trans::Lplus: {  // R - M = L + 2R
        const auto l = eval_left(loop, x, g, t);
        const auto rr = eval_right(loop, x, g, t);
        for (int i = 0; i < loop_dim; ++i) r[i] = l[i] + rr[i] + rr[i];
        return r;
      }
      case Trans::Rplus: {  // M - L = -2L - R
        const auto l = eval_left(loop, x, g, t);
        const auto rr = eval_right(loop, x, g, t);
        for (int i = 0; i < loop_dim; ++i) r[i] = -l[i] - l[i] - rr[i];
        return r;
      }
      case Trans::Mplus: {  // L - R
        const auto l = eval_left(loop, x, g, t);
        const auto rr = eval_right(loop, x, g, t);
        for (int i = 0; i < loop_dim; ++i) r[i] = l[i] - rr[i];
        return r;
      }
    }
    return r;
  }};
}

/// Lie bracket of fields, [A,B]^i = A^s d_s B^i - B^s d_s A^i, realized by
/// seeding one extra tag along the evaluated directions.
template <class S>
VecField<S> commutator(VecField<S> a, VecField<S> b) {
  return {[a = std::move(a), b = std::move(b)](const Coords<Jet<S>>& g, int t) {
    Jet<S>::check_tag(t);
    const auto aval = a.eval(g, t);
    const auto bval = b.eval(g, t);
    const auto b_along_a = b.eval(seed_direction(g, t, aval), t + 1);
    const auto a_along_b = a.eval(seed_direction(g, t, bval), t + 1);
    Coords<Jet<S>> r;
    for (int i = 0; i < loop_dim; ++i)
      r[i] = b_along_a[i].extracted_from_tag(t) - a_along_b[i].extracted_from_tag(t);
    return r;
  }};
}

template <class S>
VecField<S> field_sum(std::vector<VecField<S>> parts) {
  return {[parts = std::move(parts)](const Coords<Jet<S>>& g, int t) {
    Coords<Jet<S>> r;
    for (const auto& p : parts) {
      const auto v = p.eval(g, t);
      for (int i = 0; i < loop_dim; ++i) r[i] += v[i];
    }
    return r;
  }};
}

template <class S>
VecField<S> field_scale(std::type_identity_t<S> c, VecField<S> a) {
  return {[c = std::move(c), a = std::move(a)](const Coords<Jet<S>>& g, int t) {
    auto v = a.eval(g, t);
    const Jet<S> cj = Jet<S>::constant(c);
    for (int i = 0; i < loop_dim; ++i) v[i] = cj * v[i];
    return v;
  }};
}

/// The Yamagutian Y(x;y) = ([L_x,L_y] + [R_x,R_y] + [M_x,M_y]) / 6,
/// antisymmetric in (x,y).
template <class S>
VecField<S> yamagutian(const LocalLoop<S>& loop, const Coords<S>& x,
                       const Coords<S>& y) {
  auto sum = field_sum<S>(
      {commutator(translation(loop, Trans::L, x), translation(loop, Trans::L, y)),
       commutator(translation(loop, Trans::R, x), translation(loop, Trans::R, y)),
       commutator(translation(loop, Trans::M, x), translation(loop, Trans::M, y))});
  return field_scale(S(1) / S(6), std::move(sum));
}

template <class S>
FieldValue<S> eval_at(const VecField<S>& f, const ChartPoint<S>& g) {
  const auto v = f.eval(lift_point(g), 0);
  FieldValue<S> r{g, {}};
  for (int i = 0; i < loop_dim; ++i) r.coeffs[i] = v[i].value();
  return r;
}

template <class S>
AlgebraElement<S> to_algebra(const Coords<S>& x) {
  return AlgebraElement<S>(x.begin(), x.end());
}

template <class S>
Coords<S> to_coords(const AlgebraElement<S>& x) {
  if (x.size() != loop_dim)
    throw std::invalid_argument("expected a tangent vector of the loop");
  Coords<S> r;
  for (int i = 0; i < loop_dim; ++i) r[i] = x[i];
  return r;
}

/// Tangent bracket via structure constants, on chart-tangent vectors.
template <class S>
Coords<S> tangent_bracket(const StructureConstants<S>& sc, const Coords<S>& x,
                          const Coords<S>& y) {
  return to_coords(bracket(sc, to_algebra(x), to_algebra(y)));
}

/// Derives the tangent structure constants by calibrating the first
/// Maurer-Cartan relation at the origin:
///   C^i_jk = ([L_ej, L_ek] + 2 [L_ej, R_ek])^i (0),
/// then re-verifies that relation at the given probe points (with random
/// probe vectors baked from the point coordinates). A failure at either
/// step aborts with convention_error.
template <class S>
StructureConstants<S> derive_structure_constants(
    const LocalLoop<S>& loop,
    const std::vector<ChartPoint<S>>& probe_points = {}) {
  const int n = loop_dim;
  std::vector<S> dense(static_cast<size_t>(n) * n * n, S(0));
  const auto origin = chart_origin<S>();
  for (int j = 0; j < n; ++j) {
    Coords<S> ej = origin;
    ej[j] = S(1);
    for (int k = 0; k < n; ++k) {
      Coords<S> ek = origin;
      ek[k] = S(1);
      auto comb = field_sum<S>(
          {commutator(translation(loop, Trans::L, ej), translation(loop, Trans::L, ek)),
           field_scale(S(2), commutator(translation(loop, Trans::L, ej),
                                        translation(loop, Trans::R, ek)))});
      const auto fv = eval_at(comb, origin);
      for (int i = 0; i < n; ++i)
        dense[static_cast<size_t>((i * n + j) * n + k)] = fv.coeffs[i];
    }
  }

  StructureConstants<S> sc;
  try {
    sc = make_structure_constants<S>(n, std::move(dense));
  } catch (const std::invalid_argument& e) {
    throw convention_error(std::string("structure constant calibration: ") + e.what());
  }

  for (const auto& g : probe_points) {
    // probe vectors: basis pairs are enough to span the bilinear identity
    for (int j = 0; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Coords<S> x = origin, y = origin;
        x[j] = S(1);
        y[k] = S(1);
        auto lhs = eval_at(commutator(translation(loop, Trans::L, x),
                                      translation(loop, Trans::L, y)),
                           g);
        auto rhs = eval_at(translation(loop, Trans::L, tangent_bracket(sc, x, y)), g) -
                   S(2) * eval_at(commutator(translation(loop, Trans::L, x),
                                             translation(loop, Trans::R, y)),
                                  g);
        if (!ScalarMode<S>::negligible(max_abs(lhs - rhs)))
          throw convention_error(
              "structure constant calibration: bracket relation fails away from origin");
      }
  }
  return sc;
}

}  // namespace octoloop
