#include "cyclicsign/linear_exact.hpp"

namespace cyclicsign {

Rational det_exact(const MatrixQ& m) {
  if (m.rows() != m.cols()) throw InvalidDimension("determinant of a non-square matrix");
  const Eigen::Index n = m.rows();
  MatrixZ scaled(n, n);
  Integer scale = 1;
  for (Eigen::Index i = 0; i < n; ++i) {
    Integer row_lcm = 1;
    for (Eigen::Index j = 0; j < n; ++j) {
      row_lcm = boost::multiprecision::lcm(row_lcm, Integer(boost::multiprecision::denominator(m(i, j))));
    }
    for (Eigen::Index j = 0; j < n; ++j) {
      scaled(i, j) = boost::multiprecision::numerator(m(i, j)) *
                     (row_lcm / boost::multiprecision::denominator(m(i, j)));
    }
    scale *= row_lcm;
  }
  return Rational(bareiss_determinant(scaled), scale);
}

}  // namespace cyclicsign
