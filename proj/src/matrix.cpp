#include "rrca/exact/matrix.hpp"

namespace rrca {

int bareiss_rank(Mat<ParamPoly> m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  ParamPoly prev(1);
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = r; i < rows; ++i)
      if (!m(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) m.row(piv).swap(m.row(r));
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      for (Eigen::Index j = c + 1; j < cols; ++j)
        m(i, j) = exact_divide(m(r, c) * m(i, j) - m(i, c) * m(r, j), prev);
      m(i, c) = ParamPoly(0);
    }
    prev = m(r, c);
    ++r;
  }
  return static_cast<int>(r);
}

}  // namespace rrca
