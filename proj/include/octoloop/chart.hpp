#pragma once

#include <array>
#include <stdexcept>

#include "octoloop/jet.hpp"
#include "octoloop/octonion.hpp"

namespace octoloop {

inline constexpr int loop_dim = 7;

struct chart_singularity_error : std::domain_error {
  using std::domain_error::domain_error;
};

template <class R>
using Coords = std::array<R, loop_dim>;

/// Chart coordinates of a unit octonion near the identity; the origin is
/// the loop identity. The chart covers everything except Re(g) = -1.
template <class S>
using ChartPoint = Coords<S>;

template <class S>
ChartPoint<S> chart_origin() {
  ChartPoint<S> p;
  p.fill(S(0));
  return p;
}

/// Cayley transform g = ((1 - |x|^2) - 2x) / (1 + |x|^2); a rational map
/// onto unit octonions with chart_to_loop(0) = 1.
template <class R>
Octonion<R> chart_to_loop(const Coords<R>& x) {
  R n2 = x[0] * x[0];
  for (int i = 1; i < loop_dim; ++i) n2 += x[i] * x[i];
  const R den = R(1) + n2;
  Octonion<R> g;
  g.c[0] = (R(1) - n2) / den;
  for (int i = 0; i < loop_dim; ++i) g.c[i + 1] = -(R(2) * x[i]) / den;
  return g;
}

/// Inverse Cayley transform x = -Im(g) / (1 + Re(g)); requires Re(g) != -1.
template <class R>
Coords<R> loop_to_chart(const Octonion<R>& g) {
  const R den = R(1) + g.c[0];
  if (is_zero(leading_part(den)))
    throw chart_singularity_error("loop_to_chart: point with Re(g) = -1");
  Coords<R> x;
  for (int i = 0; i < loop_dim; ++i) x[i] = -g.c[i + 1] / den;
  return x;
}

/// The loop product in chart coordinates. Rational in both arguments and
/// evaluable over any scalar ring, in particular over jets.
template <class R>
Coords<R> chart_mul(const Coords<R>& a, const Coords<R>& b) {
  return loop_to_chart(chart_to_loop(a) * chart_to_loop(b));
}

/// Exact left division: the unique h with chart_mul(a, h) == c.
template <class R>
Coords<R> chart_left_divide(const Coords<R>& a, const Coords<R>& c) {
  return loop_to_chart(oct_inverse(chart_to_loop(a)) * chart_to_loop(c));
}

/// Exact right division: the unique h with chart_mul(h, b) == c.
template <class R>
Coords<R> chart_right_divide(const Coords<R>& b, const Coords<R>& c) {
  return loop_to_chart(chart_to_loop(c) * oct_inverse(chart_to_loop(b)));
}

/// The unit-octonion loop in its rational chart. Frame orientation is
/// fixed by calibrate_frames(); see frames.hpp.
template <class S>
struct LocalLoop {
  static constexpr int dim = loop_dim;

  // When set, the roles of the two auxiliary frames are exchanged. The
  // standard assignment is validated against the generalized Lie
  // equations before anything downstream runs.
  bool swapped_frames = false;

  ChartPoint<S> mul(const ChartPoint<S>& a, const ChartPoint<S>& b) const {
    return chart_mul(a, b);
  }
  Coords<Jet<S>> mul(const Coords<Jet<S>>& a, const Coords<Jet<S>>& b) const {
    return chart_mul(a, b);
  }
};

/// Lifts a scalar point to jet coordinates with no seeds.
template <class S>
Coords<Jet<S>> lift_point(const ChartPoint<S>& p) {
  Coords<Jet<S>> j;
  for (int i = 0; i < loop_dim; ++i) j[i] = Jet<S>::constant(p[i]);
  return j;
}

/// Adds tag*direction to a jet point (seeding a directional derivative).
template <class S>
Coords<Jet<S>> seed_direction(const Coords<Jet<S>>& p, int tag,
                              const Coords<Jet<S>>& direction) {
  Coords<Jet<S>> r;
  for (int i = 0; i < loop_dim; ++i)
    r[i] = p[i] + direction[i].shifted_into_tag(tag);
  return r;
}

template <class S>
Coords<Jet<S>> seed_coordinate(const Coords<Jet<S>>& p, int tag, int coord) {
  Coords<Jet<S>> r = p;
  r[coord] = r[coord] + Jet<S>::constant(S(1)).shifted_into_tag(tag);
  return r;
}

}  // namespace octoloop
