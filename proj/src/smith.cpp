#include "wallnorm/smith.hpp"

#include <stdexcept>

namespace wallnorm {

IntegerMatrix unimodular_inverse(const IntegerMatrix& m) {
  const Eigen::Index n = m.rows();
  RationalMatrix a(n, 2 * n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      a(r, c) = Rational(m(r, c));
      a(r, n + c) = Rational(r == c ? 1 : 0);
    }
  }
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) throw std::invalid_argument("unimodular_inverse: singular matrix");
    if (pivot != col) a.row(pivot).swap(a.row(col));
    const Rational p = a(col, col);
    for (Eigen::Index c = 0; c < 2 * n; ++c) a(col, c) /= p;
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      const Rational f = a(r, col);
      for (Eigen::Index c = 0; c < 2 * n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  IntegerMatrix out(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      const Rational& x = a(r, n + c);
      if (denominator(x) != 1) throw std::invalid_argument("unimodular_inverse: matrix is not unimodular");
      out(r, c) = numerator(x);
    }
  }
  return out;
}

}  // namespace wallnorm
