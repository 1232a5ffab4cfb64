#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace octoloop {

/// Exact field element. GMP keeps values canonical: positive denominator
/// and gcd(|num|, den) == 1, so equality-to-zero is unambiguous.
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
  if (den == 0) throw std::domain_error("rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "p/q" or "p" (no decimal forms).
inline Rational parse_rational(const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789/-+") != std::string::npos)
    throw std::invalid_argument("parse_rational: malformed rational '" + text + "'");
  Rational q;
  if (q.set_str(text, 10) != 0)
    throw std::invalid_argument("parse_rational: malformed rational '" + text + "'");
  if (q.get_den() == 0)
    throw std::domain_error("parse_rational: zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(double x) { return x == 0.0; }

inline Rational abs_value(const Rational& q) { return abs(q); }
inline double abs_value(double x) { return std::fabs(x); }

// The two computation modes share one code path; this is the only place
// where they differ: what counts as a vanishing defect and how values
// are rendered in reports.
template <class S>
struct ScalarMode;

template <>
struct ScalarMode<Rational> {
  static constexpr bool exact = true;
  static constexpr const char* name = "exact";
  static bool negligible(const Rational& q) { return is_zero(q); }
  static std::string render(const Rational& q) { return q.get_str(); }
  static Rational fraction(long num, long den) { return rational(num, den); }
};

template <>
struct ScalarMode<double> {
  static constexpr bool exact = false;
  static constexpr const char* name = "float";
  static constexpr double tolerance = 1e-9;
  static bool negligible(double x) { return std::fabs(x) <= tolerance; }
  static std::string render(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
  }
  static double fraction(long num, long den) {
    return static_cast<double>(num) / static_cast<double>(den);
  }
};

template <class S>
S scalar_fraction(long num, long den = 1) {
  return ScalarMode<S>::fraction(num, den);
}

}  // namespace octoloop
