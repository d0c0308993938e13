#pragma once

#include <algorithm>
#include <utility>

#include "wallnorm/numeric.hpp"

namespace wallnorm {

/// left * input * right == diagonal, with left and right unimodular and the
/// diagonal in Smith form: d_0 | d_1 | ... | d_{rank-1}, all positive, zeros after.
template <class Int>
struct SmithForm {
  Matrix<Int> left;
  Matrix<Int> diagonal;
  Matrix<Int> right;
  int rank = 0;
};

namespace detail {

template <class Int>
Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;  // truncates toward zero
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

template <class Int>
void add_row_multiple(Matrix<Int>& m, Eigen::Index dst, Eigen::Index src, const Int& factor) {
  if (factor == 0) return;
  for (Eigen::Index c = 0; c < m.cols(); ++c) m(dst, c) += factor * m(src, c);
}

template <class Int>
void add_col_multiple(Matrix<Int>& m, Eigen::Index dst, Eigen::Index src, const Int& factor) {
  if (factor == 0) return;
  for (Eigen::Index r = 0; r < m.rows(); ++r) m(r, dst) += factor * m(r, src);
}

}  // namespace detail

/// Smith normal form over the integers by repeated minimal-pivot elimination.
template <class Int>
SmithForm<Int> smith_normal_form(const Matrix<Int>& input) {
  using detail::add_col_multiple;
  using detail::add_row_multiple;
  using detail::floor_div;
  using Index = Eigen::Index;

  const Index rows = input.rows();
  const Index cols = input.cols();
  SmithForm<Int> out;
  out.diagonal = input;
  out.left = Matrix<Int>::Identity(rows, rows);
  out.right = Matrix<Int>::Identity(cols, cols);
  Matrix<Int>& a = out.diagonal;

  auto abs_of = [](const Int& x) { return x < 0 ? Int(-x) : x; };

  Index t = 0;
  for (; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      Index pr = -1, pc = -1;
      for (Index r = t; r < rows; ++r) {
        for (Index c = t; c < cols; ++c) {
          if (a(r, c) != 0 && (pr < 0 || abs_of(a(r, c)) < abs_of(a(pr, pc)))) {
            pr = r;
            pc = c;
          }
        }
      }
      if (pr < 0) {
        out.rank = static_cast<int>(t);
        goto normalize;
      }
      if (pr != t) {
        a.row(pr).swap(a.row(t));
        out.left.row(pr).swap(out.left.row(t));
      }
      if (pc != t) {
        a.col(pc).swap(a.col(t));
        out.right.col(pc).swap(out.right.col(t));
      }
      bool clean = true;
      for (Index r = t + 1; r < rows; ++r) {
        if (a(r, t) == 0) continue;
        const Int q = floor_div(a(r, t), a(t, t));
        add_row_multiple(a, r, t, Int(-q));
        add_row_multiple(out.left, r, t, Int(-q));
        if (a(r, t) != 0) clean = false;
      }
      for (Index c = t + 1; c < cols; ++c) {
        if (a(t, c) == 0) continue;
        const Int q = floor_div(a(t, c), a(t, t));
        add_col_multiple(a, c, t, Int(-q));
        add_col_multiple(out.right, c, t, Int(-q));
        if (a(t, c) != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold any row whose entries the pivot does not divide.
      Index bad = -1;
      for (Index r = t + 1; r < rows && bad < 0; ++r) {
        for (Index c = t + 1; c < cols; ++c) {
          if (a(r, c) % a(t, t) != 0) {
            bad = r;
            break;
          }
        }
      }
      if (bad < 0) break;
      add_row_multiple(a, t, bad, Int(1));
      add_row_multiple(out.left, t, bad, Int(1));
    }
  }
  out.rank = static_cast<int>(t);
normalize:
  for (Index i = 0; i < out.rank; ++i) {
    if (a(i, i) < 0) {
      a.row(i) *= Int(-1);
      out.left.row(i) *= Int(-1);
    }
  }
  return out;
}

/// Exact determinant by fraction-free (Bareiss) elimination.
template <class Int>
Int determinant(Matrix<Int> m) {
  const Eigen::Index n = m.rows();
  if (n == 0) return Int(1);
  Int sign = 1;
  Int prev = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index swap = -1;
      for (Eigen::Index r = k + 1; r < n; ++r) {
        if (m(r, k) != 0) {
          swap = r;
          break;
        }
      }
      if (swap < 0) return Int(0);
      m.row(k).swap(m.row(swap));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// Inverse of a unimodular integer matrix via exact rational Gauss-Jordan.
/// Precondition: determinant is +-1.
IntegerMatrix unimodular_inverse(const IntegerMatrix& m);

}  // namespace wallnorm
