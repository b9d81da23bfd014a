#pragma once

#include <Eigen/Core>

#include <optional>
#include <vector>

#include "rrca/error.hpp"
#include "rrca/exact/cyclotomic.hpp"
#include "rrca/exact/param_poly.hpp"
#include "rrca/exact/rat.hpp"
#include "rrca/exact/ratfunc.hpp"
#include "rrca/exact/scalar.hpp"

#define RRCA_EXACT_NUMTRAITS(T)                                              \
  template <>                                                                \
  struct NumTraits<T> : GenericNumTraits<T> {                                \
    typedef T Real;                                                          \
    typedef T NonInteger;                                                    \
    typedef T Nested;                                                        \
    typedef T Literal;                                                       \
    enum {                                                                   \
      IsComplex = 0,                                                         \
      IsInteger = 0,                                                         \
      IsSigned = 1,                                                          \
      RequireInitialization = 1,                                             \
      ReadCost = 1,                                                          \
      AddCost = 8,                                                           \
      MulCost = 16                                                           \
    };                                                                       \
    static inline Real epsilon() { return Real(0); }                         \
    static inline Real dummy_precision() { return Real(0); }                 \
    static inline int digits10() { return 0; }                               \
  };

namespace Eigen {
RRCA_EXACT_NUMTRAITS(rrca::Rat)
RRCA_EXACT_NUMTRAITS(rrca::Cyc)
RRCA_EXACT_NUMTRAITS(rrca::ParamPoly)
RRCA_EXACT_NUMTRAITS(rrca::RatFunc)
}  // namespace Eigen

#undef RRCA_EXACT_NUMTRAITS

namespace rrca {

template <class F>
using Mat = Eigen::Matrix<F, Eigen::Dynamic, Eigen::Dynamic>;
template <class F>
using Vec = Eigen::Matrix<F, Eigen::Dynamic, 1>;

template <class F>
bool is_zero_matrix(const Mat<F>& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!detail::zero_adl(m(i, j))) return false;
  return true;
}

template <class F>
bool matrices_equal(const Mat<F>& a, const Mat<F>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

template <class F>
struct Rref {
  Mat<F> reduced;
  std::vector<int> pivots;  // pivot column of each nonzero row
  int rank() const { return static_cast<int>(pivots.size()); }
};

// Reduced row echelon form over an exact field.
template <class F>
Rref<F> rref(Mat<F> m) {
  Rref<F> out;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = row; i < m.rows(); ++i)
      if (!detail::zero_adl(m(i, col))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != row) m.row(piv).swap(m.row(row));
    F inv = inverse(m(row, col));
    for (Eigen::Index j = col; j < m.cols(); ++j)
      if (!detail::zero_adl(m(row, j))) m(row, j) = m(row, j) * inv;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i == row || detail::zero_adl(m(i, col))) continue;
      F f = m(i, col);
      for (Eigen::Index j = col; j < m.cols(); ++j)
        if (!detail::zero_adl(m(row, j))) m(i, j) = m(i, j) - f * m(row, j);
    }
    out.pivots.push_back(static_cast<int>(col));
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

template <class F>
int rank(const Mat<F>& m) {
  return rref<F>(m).rank();
}

// Basis of the right null space, one vector per column.
template <class F>
Mat<F> kernel(const Mat<F>& m) {
  Rref<F> r = rref<F>(m);
  const Eigen::Index n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (int p : r.pivots) is_pivot[p] = true;
  Mat<F> k = Mat<F>::Zero(n, n - r.rank());
  Eigen::Index out = 0;
  for (Eigen::Index free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    k(free, out) = F(1);
    for (int i = 0; i < r.rank(); ++i) k(r.pivots[i], out) = -r.reduced(i, free);
    ++out;
  }
  return k;
}

// Linearly independent columns spanning the column space of m (in echelon form).
template <class F>
Mat<F> column_basis(const Mat<F>& m) {
  Rref<F> r = rref<F>(Mat<F>(m.transpose()));
  return r.reduced.topRows(r.rank()).transpose();
}

// Rows p_i with p_i * v = 0 for every column v of b; they cut out span(b).
template <class F>
Mat<F> annihilator(const Mat<F>& b, Eigen::Index ambient) {
  if (b.cols() == 0) return Mat<F>::Identity(ambient, ambient);
  return kernel<F>(Mat<F>(b.transpose())).transpose();
}

template <class F>
Mat<F> intersect_subspaces(const Mat<F>& a, const Mat<F>& b) {
  if (a.rows() != b.rows()) throw MathError("dimension mismatch in subspace intersection");
  if (a.cols() == 0 || b.cols() == 0) return Mat<F>(a.rows(), 0);
  Mat<F> joined(a.rows(), a.cols() + b.cols());
  joined << a, -b;
  Mat<F> k = kernel<F>(joined);
  Mat<F> v = a * k.topRows(a.cols());
  return column_basis<F>(v);
}

// Unique solution of a x = b; throws when inconsistent or underdetermined.
template <class F>
Vec<F> solve_unique(const Mat<F>& a, const Vec<F>& b) {
  Mat<F> aug(a.rows(), a.cols() + 1);
  aug << a, b;
  Rref<F> r = rref<F>(aug);
  if (!r.pivots.empty() && r.pivots.back() == a.cols()) throw MathError("inconsistent linear system");
  if (r.rank() != a.cols()) throw MathError("linear system has no unique solution");
  Vec<F> x(a.cols());
  for (int i = 0; i < r.rank(); ++i) x(r.pivots[i]) = r.reduced(i, a.cols());
  return x;
}

template <class F>
Mat<F> inverse_matrix(const Mat<F>& a) {
  if (a.rows() != a.cols()) throw MathError("inverse of non-square matrix");
  Mat<F> aug(a.rows(), 2 * a.cols());
  aug << a, Mat<F>::Identity(a.rows(), a.cols());
  Rref<F> r = rref<F>(aug);
  if (r.rank() < a.rows() || r.pivots.back() >= a.cols()) throw MathError("matrix is singular");
  return r.reduced.rightCols(a.cols());
}

template <class F>
Mat<F> kron(const Mat<F>& a, const Mat<F>& b) {
  Mat<F> out = Mat<F>::Zero(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (detail::zero_adl(a(i, j))) continue;
      for (Eigen::Index k = 0; k < b.rows(); ++k)
        for (Eigen::Index l = 0; l < b.cols(); ++l)
          if (!detail::zero_adl(b(k, l))) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

template <class F>
F trace(const Mat<F>& a) {
  F t(0);
  for (Eigen::Index i = 0; i < std::min(a.rows(), a.cols()); ++i) t += a(i, i);
  return t;
}

// Sparse-aware exact product; Eigen's kernel would touch every zero entry.
template <class F>
Mat<F> multiply(const Mat<F>& a, const Mat<F>& b) {
  if (a.cols() != b.rows()) throw MathError("dimension mismatch in matrix product");
  Mat<F> out = Mat<F>::Zero(a.rows(), b.cols());
  for (Eigen::Index k = 0; k < a.cols(); ++k)
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      if (detail::zero_adl(b(k, j))) continue;
      for (Eigen::Index i = 0; i < a.rows(); ++i)
        if (!detail::zero_adl(a(i, k))) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

template <class F>
Mat<F> matrix_power(const Mat<F>& a, int e) {
  Mat<F> r = Mat<F>::Identity(a.rows(), a.cols());
  for (int i = 0; i < e; ++i) r = multiply<F>(r, a);
  return r;
}

// Fraction-free elimination over a polynomial ring; returns the rank over the fraction field.
int bareiss_rank(Mat<ParamPoly> m);

}  // namespace rrca
