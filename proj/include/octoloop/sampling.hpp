#pragma once

#include <cstdint>

#include "octoloop/chart.hpp"

namespace octoloop {

/// Deterministic cross-platform generator (splitmix64). Distribution code
/// avoids std::uniform_* on purpose: report bytes must not depend on the
/// standard library implementation.
struct SampleRng {
  uint64_t state;

  explicit SampleRng(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  long below(long n) { return static_cast<long>(next() % static_cast<uint64_t>(n)); }
};

/// Chart sample coordinates: p/q with |p| <= 2, 11 <= q <= 16, so that
/// |g|^2 <= 7*(2/11)^2 < 1/4. Numerators and denominators stay within 16.
template <class S>
ChartPoint<S> sample_chart_point(SampleRng& rng) {
  ChartPoint<S> p;
  for (int i = 0; i < loop_dim; ++i) {
    const long num = rng.below(5) - 2;
    const long den = 11 + rng.below(6);
    p[i] = scalar_fraction<S>(num, den);
  }
  return p;
}

/// Tangent sample coordinates: p/q with |p| <= 3, 1 <= q <= 4.
template <class S>
Coords<S> sample_tangent(SampleRng& rng) {
  Coords<S> x;
  for (int i = 0; i < loop_dim; ++i) {
    const long num = rng.below(7) - 3;
    const long den = 1 + rng.below(4);
    x[i] = scalar_fraction<S>(num, den);
  }
  return x;
}

/// Random rational octonion, coordinates p/q with |p| <= 16, 1 <= q <= 16.
template <class S>
Octonion<S> sample_octonion(SampleRng& rng) {
  Octonion<S> o;
  for (int i = 0; i < 8; ++i) {
    const long num = rng.below(33) - 16;
    const long den = 1 + rng.below(16);
    o.c[i] = scalar_fraction<S>(num, den);
  }
  return o;
}

}  // namespace octoloop
