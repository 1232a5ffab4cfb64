#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "octoloop/rational.hpp"

namespace octoloop {

template <class S>
using AlgebraElement = std::vector<S>;

/// Structure constants C^i_jk of an anticommutative algebra, output index
/// first. Antisymmetry in (j,k) is enforced at construction; symmetric
/// storage is rejected rather than silently antisymmetrized.
template <class S>
struct StructureConstants {
  int dim = 0;
  std::vector<std::string> basis;  // optional labels, size dim when present
  std::vector<S> c;                // dense, (i*dim + j)*dim + k

  const S& at(int i, int j, int k) const {
    return c[static_cast<size_t>((i * dim + j) * dim + k)];
  }
  S& at(int i, int j, int k) {
    return c[static_cast<size_t>((i * dim + j) * dim + k)];
  }
};

template <class S>
StructureConstants<S> make_structure_constants(int dim, std::vector<S> dense,
                                               std::vector<std::string> basis = {}) {
  if (dim <= 0) throw std::invalid_argument("structure constants: dim must be positive");
  if (dense.size() != static_cast<size_t>(dim) * dim * dim)
    throw std::invalid_argument("structure constants: dense size mismatch");
  StructureConstants<S> sc{dim, std::move(basis), std::move(dense)};
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = j; k < dim; ++k)
        if (!is_zero(sc.at(i, j, k) + sc.at(i, k, j)))
          throw std::invalid_argument(
              "structure constants: antisymmetry violated at (" + std::to_string(i) +
              "," + std::to_string(j) + "," + std::to_string(k) + ")");
  return sc;
}

template <class S>
void check_dim(const StructureConstants<S>& sc, const AlgebraElement<S>& x) {
  if (static_cast<int>(x.size()) != sc.dim)
    throw std::invalid_argument("algebra element dimension mismatch");
}

template <class S>
AlgebraElement<S> algebra_zero(int dim) {
  return AlgebraElement<S>(static_cast<size_t>(dim), S(0));
}

template <class S>
AlgebraElement<S> algebra_basis(int dim, int j) {
  auto e = algebra_zero<S>(dim);
  e[static_cast<size_t>(j)] = S(1);
  return e;
}

/// [x,y]^i = C^i_jk x^j y^k.
template <class S>
AlgebraElement<S> bracket(const StructureConstants<S>& sc,
                          const AlgebraElement<S>& x, const AlgebraElement<S>& y) {
  check_dim(sc, x);
  check_dim(sc, y);
  const int n = sc.dim;
  auto r = algebra_zero<S>(n);
  for (int j = 0; j < n; ++j) {
    if (is_zero(x[j])) continue;
    for (int k = 0; k < n; ++k) {
      if (is_zero(y[k])) continue;
      const S xy = x[j] * y[k];
      for (int i = 0; i < n; ++i) {
        const S& cijk = sc.at(i, j, k);
        if (!is_zero(cijk)) r[i] += cijk * xy;
      }
    }
  }
  return r;
}

/// Jacobi defect J(x,y,z) = [[x,y],z] + [[y,z],x] + [[z,x],y]; vanishes
/// exactly when the algebra is Lie.
template <class S>
AlgebraElement<S> jacobian(const StructureConstants<S>& sc, const AlgebraElement<S>& x,
                           const AlgebraElement<S>& y, const AlgebraElement<S>& z) {
  auto r = bracket(sc, bracket(sc, x, y), z);
  const auto t1 = bracket(sc, bracket(sc, y, z), x);
  const auto t2 = bracket(sc, bracket(sc, z, x), y);
  for (size_t i = 0; i < r.size(); ++i) r[i] += t1[i] + t2[i];
  return r;
}

/// Ternary bracket [x,y,z] = [x,[y,z]] - [y,[x,z]] + [[x,y],z];
/// antisymmetric in (x,y).
template <class S>
AlgebraElement<S> yamaguti_bracket(const StructureConstants<S>& sc,
                                   const AlgebraElement<S>& x, const AlgebraElement<S>& y,
                                   const AlgebraElement<S>& z) {
  auto r = bracket(sc, x, bracket(sc, y, z));
  const auto t1 = bracket(sc, y, bracket(sc, x, z));
  const auto t2 = bracket(sc, bracket(sc, x, y), z);
  for (size_t i = 0; i < r.size(); ++i) r[i] += t2[i] - t1[i];
  return r;
}

/// [[x,y],[x,z]] - [[[x,y],z],x] - [[[y,z],x],x] - [[[z,x],x],y];
/// zero for Mal'tsev algebras.
template <class S>
AlgebraElement<S> maltsev_defect(const StructureConstants<S>& sc,
                                 const AlgebraElement<S>& x, const AlgebraElement<S>& y,
                                 const AlgebraElement<S>& z) {
  auto r = bracket(sc, bracket(sc, x, y), bracket(sc, x, z));
  const auto t1 = bracket(sc, bracket(sc, bracket(sc, x, y), z), x);
  const auto t2 = bracket(sc, bracket(sc, bracket(sc, y, z), x), x);
  const auto t3 = bracket(sc, bracket(sc, bracket(sc, z, x), x), y);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= t1[i] + t2[i] + t3[i];
  return r;
}

/// Sagle-Yamaguti defect [x,y,[z,w]] - [[x,y,z],w] - [z,[x,y,w]] with the
/// ternary brackets built from the binary ones.
template <class S>
AlgebraElement<S> sagle_yamaguti_defect(const StructureConstants<S>& sc,
                                        const AlgebraElement<S>& x, const AlgebraElement<S>& y,
                                        const AlgebraElement<S>& z, const AlgebraElement<S>& w) {
  auto r = yamaguti_bracket(sc, x, y, bracket(sc, z, w));
  const auto t1 = bracket(sc, yamaguti_bracket(sc, x, y, z), w);
  const auto t2 = bracket(sc, z, yamaguti_bracket(sc, x, y, w));
  for (size_t i = 0; i < r.size(); ++i) r[i] -= t1[i] + t2[i];
  return r;
}

/// Ternary constants Y^i_jkl normalized so that
/// [x,y,z]^i = 6 Y^i_jkl x^j y^k z^l.
template <class S>
struct TernaryTable {
  int dim = 0;
  std::vector<S> y;  // dense, ((i*dim + j)*dim + k)*dim + l

  const S& at(int i, int j, int k, int l) const {
    return y[static_cast<size_t>(((i * dim + j) * dim + k) * dim + l)];
  }
  S& at(int i, int j, int k, int l) {
    return y[static_cast<size_t>(((i * dim + j) * dim + k) * dim + l)];
  }
};

template <class S>
TernaryTable<S> ternary_table(const StructureConstants<S>& sc) {
  const int n = sc.dim;
  TernaryTable<S> t{n, std::vector<S>(static_cast<size_t>(n) * n * n * n, S(0))};
  const S sixth = S(1) / S(6);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      if (j == k) continue;  // antisymmetric in (j,k)
      for (int l = 0; l < n; ++l) {
        const auto v = yamaguti_bracket(sc, algebra_basis<S>(n, j),
                                        algebra_basis<S>(n, k), algebra_basis<S>(n, l));
        for (int i = 0; i < n; ++i)
          if (!is_zero(v[i])) t.at(i, j, k, l) = sixth * v[i];
      }
    }
  return t;
}

/// Contraction 6 Y^i_jkl x^j y^k z^l (the ternary bracket read off a table).
template <class S>
AlgebraElement<S> ternary_bracket(const TernaryTable<S>& t, const AlgebraElement<S>& x,
                                  const AlgebraElement<S>& y, const AlgebraElement<S>& z) {
  const int n = t.dim;
  auto r = algebra_zero<S>(n);
  for (int j = 0; j < n; ++j) {
    if (is_zero(x[j])) continue;
    for (int k = 0; k < n; ++k) {
      if (is_zero(y[k])) continue;
      const S xy = x[j] * y[k];
      for (int l = 0; l < n; ++l) {
        if (is_zero(z[l])) continue;
        const S xyz = xy * z[l];
        for (int i = 0; i < n; ++i) {
          const S& c = t.at(i, j, k, l);
          if (!is_zero(c)) r[i] += S(6) * c * xyz;
        }
      }
    }
  }
  return r;
}

/// Table-driven Sagle-Yamaguti defect (same combination, ternary brackets
/// contracted from the table instead of recomputed from C).
template <class S>
AlgebraElement<S> sagle_yamaguti_defect(const StructureConstants<S>& sc,
                                        const TernaryTable<S>& t,
                                        const AlgebraElement<S>& x, const AlgebraElement<S>& y,
                                        const AlgebraElement<S>& z, const AlgebraElement<S>& w) {
  auto r = ternary_bracket(t, x, y, bracket(sc, z, w));
  const auto t1 = bracket(sc, ternary_bracket(t, x, y, z), w);
  const auto t2 = bracket(sc, z, ternary_bracket(t, x, y, w));
  for (size_t i = 0; i < r.size(); ++i) r[i] -= t1[i] + t2[i];
  return r;
}

/// Linear operator on algebra coordinates (n x n matrix, row-major).
template <class S>
struct OperatorMatrix {
  int dim = 0;
  std::vector<S> m;

  const S& at(int i, int j) const { return m[static_cast<size_t>(i * dim + j)]; }
  S& at(int i, int j) { return m[static_cast<size_t>(i * dim + j)]; }

  AlgebraElement<S> apply(const AlgebraElement<S>& x) const {
    auto r = algebra_zero<S>(dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        if (!is_zero(at(i, j))) r[i] += at(i, j) * x[j];
    return r;
  }

  S trace() const {
    S t = S(0);
    for (int i = 0; i < dim; ++i) t += at(i, i);
    return t;
  }
};

template <class S>
OperatorMatrix<S> operator-(const OperatorMatrix<S>& a, const OperatorMatrix<S>& b) {
  OperatorMatrix<S> r{a.dim, a.m};
  for (size_t i = 0; i < r.m.size(); ++i) r.m[i] -= b.m[i];
  return r;
}

template <class S>
OperatorMatrix<S> operator*(const OperatorMatrix<S>& a, const OperatorMatrix<S>& b) {
  const int n = a.dim;
  OperatorMatrix<S> r{n, std::vector<S>(static_cast<size_t>(n) * n, S(0))};
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (is_zero(a.at(i, k))) continue;
      for (int j = 0; j < n; ++j)
        if (!is_zero(b.at(k, j))) r.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return r;
}

/// D(x,y): z -> [x,y,z] as a matrix; the generalized-representation
/// operator of the pair (x,y).
template <class S>
OperatorMatrix<S> rep_operator(const StructureConstants<S>& sc,
                               const AlgebraElement<S>& x, const AlgebraElement<S>& y) {
  check_dim(sc, x);
  check_dim(sc, y);
  const int n = sc.dim;
  OperatorMatrix<S> d{n, std::vector<S>(static_cast<size_t>(n) * n, S(0))};
  for (int l = 0; l < n; ++l) {
    const auto col = yamaguti_bracket(sc, x, y, algebra_basis<S>(n, l));
    for (int i = 0; i < n; ++i) d.at(i, l) = col[i];
  }
  return d;
}

/// [D(x,y),D(z,w)] - D([x,y,z],w) - D(z,[x,y,w]); the operator form of
/// hidden associativity at the constants level.
template <class S>
OperatorMatrix<S> rep_commutator_defect(const StructureConstants<S>& sc,
                                        const AlgebraElement<S>& x, const AlgebraElement<S>& y,
                                        const AlgebraElement<S>& z, const AlgebraElement<S>& w) {
  const auto dxy = rep_operator(sc, x, y);
  const auto dzw = rep_operator(sc, z, w);
  const auto lhs = dxy * dzw - dzw * dxy;
  const auto r1 = rep_operator(sc, yamaguti_bracket(sc, x, y, z), w);
  const auto r2 = rep_operator(sc, z, yamaguti_bracket(sc, x, y, w));
  return lhs - r1 - r2;
}

template <class S>
S max_abs(const AlgebraElement<S>& v) {
  S m = S(0);
  for (const auto& x : v) {
    S a = abs_value(x);
    if (m < a) m = a;
  }
  return m;
}

}  // namespace octoloop
