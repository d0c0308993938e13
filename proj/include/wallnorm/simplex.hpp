#pragma once

#include <optional>
#include <vector>

#include "wallnorm/numeric.hpp"

namespace wallnorm {

enum class LpStatus { Optimal, Infeasible, Unbounded };

template <class Field>
struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Field value{};
  Vector<Field> x;
};

/// maximize c.x subject to A x = b, x >= 0, by the two-phase tableau simplex
/// with Bland's rule. Exact when Field is an exact field (Rational); Bland's
/// rule rules out cycling.
template <class Field>
class LinearProgram {
 public:
  LinearProgram(Matrix<Field> a, Vector<Field> b, Vector<Field> c)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {}

  LpResult<Field> solve() const {
    const Eigen::Index m = a_.rows();
    const Eigen::Index n = a_.cols();
    // Tableau columns: n structural, m artificial, 1 right-hand side.
    Matrix<Field> t = Matrix<Field>::Zero(m, n + m + 1);
    for (Eigen::Index r = 0; r < m; ++r) {
      const bool flip = b_(r) < 0;
      for (Eigen::Index col = 0; col < n; ++col) t(r, col) = flip ? Field(-a_(r, col)) : a_(r, col);
      t(r, n + r) = Field(1);
      t(r, n + m) = flip ? Field(-b_(r)) : b_(r);
    }
    std::vector<Eigen::Index> basis(m);
    for (Eigen::Index r = 0; r < m; ++r) basis[r] = n + r;

    // Phase 1: maximize -(sum of artificials).
    Vector<Field> phase1 = Vector<Field>::Zero(n + m);
    for (Eigen::Index j = n; j < n + m; ++j) phase1(j) = Field(-1);
    std::vector<char> allowed(n + m, 1);
    run(t, basis, phase1, allowed);
    Field infeasibility = 0;
    for (Eigen::Index r = 0; r < m; ++r) {
      if (basis[r] >= n) infeasibility += t(r, n + m);
    }
    LpResult<Field> result;
    if (infeasibility != 0) {
      result.status = LpStatus::Infeasible;
      return result;
    }
    // Drive remaining (zero-level) artificials out of the basis.
    std::vector<char> keep(m, 1);
    for (Eigen::Index r = 0; r < m; ++r) {
      if (basis[r] < n) continue;
      Eigen::Index enter = -1;
      for (Eigen::Index col = 0; col < n; ++col) {
        if (t(r, col) != 0) {
          enter = col;
          break;
        }
      }
      if (enter < 0) {
        keep[r] = 0;  // redundant constraint
      } else {
        pivot(t, basis, r, enter);
      }
    }
    for (Eigen::Index j = n; j < n + m; ++j) allowed[j] = 0;
    for (Eigen::Index r = 0; r < m; ++r) {
      if (!keep[r]) t.row(r).setZero();
    }

    Vector<Field> phase2 = Vector<Field>::Zero(n + m);
    phase2.head(n) = c_;
    if (!run(t, basis, phase2, allowed, &keep)) {
      result.status = LpStatus::Unbounded;
      return result;
    }
    result.status = LpStatus::Optimal;
    result.x = Vector<Field>::Zero(n);
    for (Eigen::Index r = 0; r < m; ++r) {
      if (keep[r] && basis[r] < n) result.x(basis[r]) = t(r, n + m);
    }
    result.value = Field(0);
    for (Eigen::Index j = 0; j < n; ++j) result.value += c_(j) * result.x(j);
    return result;
  }

 private:
  static void pivot(Matrix<Field>& t, std::vector<Eigen::Index>& basis, Eigen::Index row,
                    Eigen::Index col) {
    const Field p = t(row, col);
    for (Eigen::Index j = 0; j < t.cols(); ++j) t(row, j) /= p;
    for (Eigen::Index r = 0; r < t.rows(); ++r) {
      if (r == row || t(r, col) == 0) continue;
      const Field f = t(r, col);
      for (Eigen::Index j = 0; j < t.cols(); ++j) t(r, j) -= f * t(row, j);
    }
    basis[row] = col;
  }

  // Maximizes cost over the tableau; false when unbounded.
  static bool run(Matrix<Field>& t, std::vector<Eigen::Index>& basis, const Vector<Field>& cost,
                  const std::vector<char>& allowed, const std::vector<char>* active = nullptr) {
    const Eigen::Index m = t.rows();
    const Eigen::Index width = t.cols() - 1;
    const Eigen::Index rhs = width;
    for (;;) {
      // Bland: smallest-index column with positive reduced cost.
      Eigen::Index enter = -1;
      for (Eigen::Index j = 0; j < width && enter < 0; ++j) {
        if (!allowed[j]) continue;
        Field reduced = cost(j);
        for (Eigen::Index r = 0; r < m; ++r) {
          if (active && !(*active)[r]) continue;
          if (t(r, j) != 0) reduced -= cost(basis[r]) * t(r, j);
        }
        if (reduced > 0) enter = j;
      }
      if (enter < 0) return true;
      // Ratio test, ties broken by smallest basic index.
      Eigen::Index leave = -1;
      Field best{};
      for (Eigen::Index r = 0; r < m; ++r) {
        if (active && !(*active)[r]) continue;
        if (t(r, enter) <= 0) continue;
        const Field ratio = t(r, rhs) / t(r, enter);
        if (leave < 0 || ratio < best || (ratio == best && basis[r] < basis[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(t, basis, leave, enter);
    }
  }

  Matrix<Field> a_;
  Vector<Field> b_;
  Vector<Field> c_;
};

}  // namespace wallnorm
