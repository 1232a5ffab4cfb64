#pragma once

#include <array>

namespace octoloop {

/// Octonion over a commutative ring R (exact rationals, doubles, or jets).
/// Coordinate 0 is the real part; the basis convention is Cayley-Dickson
/// doubling of the quaternions with e4 the doubling unit:
/// e5 = e1*e4, e6 = e2*e4, e7 = e3*e4.
template <class R>
struct Octonion {
  std::array<R, 8> c{};

  Octonion() = default;

  static Octonion unit() {
    Octonion o;
    o.c[0] = R(1);
    return o;
  }
  static Octonion basis(int i) {
    Octonion o;
    o.c[static_cast<size_t>(i)] = R(1);
    return o;
  }
};

namespace detail {

template <class R>
using Quat = std::array<R, 4>;

template <class R>
Quat<R> qmul(const Quat<R>& a, const Quat<R>& b) {
  return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
          a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
          a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
          a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}

template <class R>
Quat<R> qconj(const Quat<R>& a) {
  return {a[0], -a[1], -a[2], -a[3]};
}

template <class R>
Quat<R> qadd(const Quat<R>& a, const Quat<R>& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}

template <class R>
Quat<R> qsub(const Quat<R>& a, const Quat<R>& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}

}  // namespace detail

/// Cayley-Dickson product: (a,b)(c,d) = (ac - conj(d) b, da + b conj(c)).
template <class R>
Octonion<R> oct_mul(const Octonion<R>& p, const Octonion<R>& q) {
  using namespace detail;
  const Quat<R> a{p.c[0], p.c[1], p.c[2], p.c[3]};
  const Quat<R> b{p.c[4], p.c[5], p.c[6], p.c[7]};
  const Quat<R> c{q.c[0], q.c[1], q.c[2], q.c[3]};
  const Quat<R> d{q.c[4], q.c[5], q.c[6], q.c[7]};
  const Quat<R> lo = qsub(qmul(a, c), qmul(qconj(d), b));
  const Quat<R> hi = qadd(qmul(d, a), qmul(b, qconj(c)));
  Octonion<R> r;
  for (int i = 0; i < 4; ++i) {
    r.c[static_cast<size_t>(i)] = lo[static_cast<size_t>(i)];
    r.c[static_cast<size_t>(i + 4)] = hi[static_cast<size_t>(i)];
  }
  return r;
}

template <class R>
Octonion<R> operator*(const Octonion<R>& p, const Octonion<R>& q) {
  return oct_mul(p, q);
}

template <class R>
Octonion<R> operator+(const Octonion<R>& p, const Octonion<R>& q) {
  Octonion<R> r;
  for (int i = 0; i < 8; ++i) r.c[i] = p.c[i] + q.c[i];
  return r;
}

template <class R>
Octonion<R> operator-(const Octonion<R>& p, const Octonion<R>& q) {
  Octonion<R> r;
  for (int i = 0; i < 8; ++i) r.c[i] = p.c[i] - q.c[i];
  return r;
}

template <class R>
Octonion<R> operator-(const Octonion<R>& p) {
  Octonion<R> r;
  for (int i = 0; i < 8; ++i) r.c[i] = -p.c[i];
  return r;
}

template <class R>
Octonion<R> oct_conj(const Octonion<R>& p) {
  Octonion<R> r;
  r.c[0] = p.c[0];
  for (int i = 1; i < 8; ++i) r.c[i] = -p.c[i];
  return r;
}

template <class R>
R oct_norm2(const Octonion<R>& p) {
  R n = p.c[0] * p.c[0];
  for (int i = 1; i < 8; ++i) n += p.c[i] * p.c[i];
  return n;
}

/// Multiplicative inverse conj(p)/|p|^2; exact for rational coordinates.
template <class R>
Octonion<R> oct_inverse(const Octonion<R>& p) {
  const R n2 = oct_norm2(p);
  Octonion<R> r = oct_conj(p);
  for (int i = 0; i < 8; ++i) r.c[i] = r.c[i] / n2;
  return r;
}

/// Left Moufang defect ((gh)g)k - g(h(gk)); identically zero for octonions.
template <class R>
Octonion<R> moufang_defect(const Octonion<R>& g, const Octonion<R>& h,
                           const Octonion<R>& k) {
  return ((g * h) * g) * k - g * (h * (g * k));
}

/// All three classical Moufang forms:
///   ((gh)g)k - g(h(gk)),  (gh)(kg) - g((hk)g),  ((gh)k)h - g(h(kh)).
template <class R>
std::array<Octonion<R>, 3> moufang_defects(const Octonion<R>& g,
                                           const Octonion<R>& h,
                                           const Octonion<R>& k) {
  return {((g * h) * g) * k - g * (h * (g * k)),
          (g * h) * (k * g) - g * ((h * k) * g),
          ((g * h) * k) * h - g * (h * (k * h))};
}

template <class R>
Octonion<R> oct_associator(const Octonion<R>& x, const Octonion<R>& y,
                           const Octonion<R>& z) {
  return (x * y) * z - x * (y * z);
}

}  // namespace octoloop
