#pragma once

#include <array>
#include <stdexcept>

#include "octoloop/rational.hpp"

namespace octoloop {

struct tag_budget_error : std::length_error {
  using std::length_error::length_error;
};

/// Truncated Taylor value over up to three nilpotent tags t0, t1, t2 with
/// ta*ta = 0 and ta*tb = tb*ta. Coefficients are indexed by tag subsets
/// (bitmask over {t0,t1,t2}); coeff(0) is the plain value and coeff(m) is
/// the mixed partial derivative along the tags in m. No factorial factors
/// arise because every tag in a surviving monomial is distinct.
template <class S>
struct Jet {
  static constexpr int tag_count = 3;
  static constexpr int width = 1 << tag_count;

  std::array<S, width> c{};

  Jet() = default;
  Jet(int v) { c[0] = S(v); }               // NOLINT: implicit by design
  Jet(const S& v) { c[0] = v; }             // NOLINT

  static void check_tag(int tag) {
    if (tag < 0 || tag >= tag_count)
      throw tag_budget_error("jet: tag index exceeds the order-3 cap");
  }

  static Jet constant(const S& v) { return Jet(v); }

  /// Value v with a unit seed on `tag`: the lift of a coordinate variable.
  static Jet variable(const S& v, int tag) {
    check_tag(tag);
    Jet j(v);
    j.c[1 << tag] = S(1);
    return j;
  }

  const S& value() const { return c[0]; }

  /// Coefficient of the tag monomial `mask`, i.e. the corresponding
  /// mixed partial derivative.
  const S& coeff(int mask) const { return c.at(static_cast<size_t>(mask)); }
  S& coeff(int mask) { return c.at(static_cast<size_t>(mask)); }

  bool is_identically_zero() const {
    for (const auto& x : c)
      if (!is_zero(x)) return false;
    return true;
  }

  /// Multiplication by the tag monomial t_tag; any part already containing
  /// the tag is annihilated (ta*ta = 0).
  Jet shifted_into_tag(int tag) const {
    check_tag(tag);
    const int bit = 1 << tag;
    Jet r;
    for (int m = 0; m < width; ++m) {
      if (m & bit) continue;
      r.c[m | bit] = c[m];
    }
    return r;
  }

  /// The coefficient of t_tag as a jet over the remaining tags
  /// (i.e. d/dt_tag of this value).
  Jet extracted_from_tag(int tag) const {
    check_tag(tag);
    const int bit = 1 << tag;
    Jet r;
    for (int m = 0; m < width; ++m) {
      if (m & bit) r.c[m & ~bit] = c[m];
    }
    return r;
  }

  friend Jet operator+(const Jet& a, const Jet& b) {
    Jet r;
    for (int m = 0; m < width; ++m) r.c[m] = a.c[m] + b.c[m];
    return r;
  }
  friend Jet operator-(const Jet& a, const Jet& b) {
    Jet r;
    for (int m = 0; m < width; ++m) r.c[m] = a.c[m] - b.c[m];
    return r;
  }
  friend Jet operator-(const Jet& a) {
    Jet r;
    for (int m = 0; m < width; ++m) r.c[m] = -a.c[m];
    return r;
  }

  friend Jet operator*(const Jet& a, const Jet& b) {
    Jet r;
    for (int ma = 0; ma < width; ++ma) {
      if (is_zero(a.c[ma])) continue;
      for (int mb = 0; mb < width; ++mb) {
        if (ma & mb) continue;  // repeated tag: monomial truncates to zero
        if (is_zero(b.c[mb])) continue;
        r.c[ma | mb] += a.c[ma] * b.c[mb];
      }
    }
    return r;
  }

  /// Reciprocal; defined only when the plain value is nonzero. Writing
  /// x = v(1 + n) with n nilpotent, 1/x = (1 - n + n^2 - n^3)/v.
  Jet inverse() const {
    if (is_zero(c[0]))
      throw std::domain_error("jet: division by a jet with zero value part");
    Jet n = *this;
    n.c[0] = S(0);
    for (int m = 1; m < width; ++m) n.c[m] = n.c[m] / c[0];
    const Jet n2 = n * n;
    Jet r = Jet(S(1)) - n + n2 - n2 * n;
    for (int m = 0; m < width; ++m) r.c[m] = r.c[m] / c[0];
    return r;
  }

  friend Jet operator/(const Jet& a, const Jet& b) { return a * b.inverse(); }

  Jet& operator+=(const Jet& o) { return *this = *this + o; }
  Jet& operator-=(const Jet& o) { return *this = *this - o; }
  Jet& operator*=(const Jet& o) { return *this = *this * o; }
  Jet& operator/=(const Jet& o) { return *this = *this / o; }

  friend bool operator==(const Jet& a, const Jet& b) { return a.c == b.c; }
  friend bool operator!=(const Jet& a, const Jet& b) { return !(a == b); }
};

// Lets ring-generic code (chart maps, octonion product) test invertibility
// uniformly for plain scalars and jets.
inline const Rational& leading_part(const Rational& x) { return x; }
inline double leading_part(double x) { return x; }
template <class S>
const S& leading_part(const Jet<S>& j) {
  return j.value();
}

}  // namespace octoloop
