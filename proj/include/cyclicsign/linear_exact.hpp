#pragma once

#include "cyclicsign/errors.hpp"
#include "cyclicsign/rational.hpp"

#include <Eigen/Core>

#include <optional>
#include <utility>
#include <vector>

namespace cyclicsign {

// Exact elimination over any field-like scalar with exact equality. No
// numerical pivoting: the pivot is the first nonzero entry in column order.

template <typename Scalar>
struct RowEchelon {
  MatrixX<Scalar> reduced;             // reduced row echelon form
  std::vector<Eigen::Index> pivot_cols;  // pivot column of row 0, 1, ...
};

template <typename Derived>
RowEchelon<typename Derived::Scalar> reduced_row_echelon(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  RowEchelon<Scalar> out{m, {}};
  auto& r = out.reduced;
  const Eigen::Index rows = r.rows();
  const Eigen::Index cols = r.cols();
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index pivot = row;
    while (pivot < rows && r(pivot, col) == Scalar(0)) ++pivot;
    if (pivot == rows) continue;
    if (pivot != row) r.row(pivot).swap(r.row(row));
    const Scalar inv = Scalar(1) / r(row, col);
    r.row(row) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == row || r(i, col) == Scalar(0)) continue;
      const Scalar factor = r(i, col);
      r.row(i) -= factor * r.row(row);
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  return out;
}

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m) {
  return static_cast<Eigen::Index>(reduced_row_echelon(m).pivot_cols.size());
}

namespace detail {

template <typename Scalar>
std::vector<VectorX<Scalar>> kernel_from_rref(const RowEchelon<Scalar>& e, Eigen::Index cols) {
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (auto c : e.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<VectorX<Scalar>> basis;
  for (Eigen::Index f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    VectorX<Scalar> v = VectorX<Scalar>::Zero(cols);
    v(f) = Scalar(1);
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
      v(e.pivot_cols[r]) = -e.reduced(static_cast<Eigen::Index>(r), f);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace detail

// Canonical null-space basis: one vector per free column of the RREF, with a
// 1 at that column and 0 at the other free columns. Empty iff the kernel is
// trivial.
template <typename Derived>
std::vector<VectorX<typename Derived::Scalar>> kernel_basis(const Eigen::MatrixBase<Derived>& m) {
  return detail::kernel_from_rref(reduced_row_echelon(m), m.cols());
}

enum class SolveStatus { Unique, Affine, Infeasible };

template <typename Scalar>
struct LinearSolveResult {
  SolveStatus status = SolveStatus::Infeasible;
  std::optional<VectorX<Scalar>> particular;  // free variables set to 0
  std::vector<VectorX<Scalar>> kernel_basis;  // canonical RREF basis
};

// All solutions of m x = b. Throws InvalidArgument on a dimension mismatch.
template <typename DerivedM, typename DerivedB>
LinearSolveResult<typename DerivedM::Scalar> solve(const Eigen::MatrixBase<DerivedM>& m,
                                                  const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedM::Scalar;
  if (b.cols() != 1 || b.rows() != m.rows()) {
    throw InvalidArgument("solve: right-hand side length does not match the row count");
  }
  const Eigen::Index cols = m.cols();
  MatrixX<Scalar> augmented(m.rows(), cols + 1);
  augmented.leftCols(cols) = m;
  augmented.col(cols) = b;
  const auto e = reduced_row_echelon(augmented);

  LinearSolveResult<Scalar> out;
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == cols) {
    out.status = SolveStatus::Infeasible;
    return out;
  }
  VectorX<Scalar> x = VectorX<Scalar>::Zero(cols);
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
    x(e.pivot_cols[r]) = e.reduced(static_cast<Eigen::Index>(r), cols);
  }
  RowEchelon<Scalar> coefficient{e.reduced.leftCols(cols), e.pivot_cols};
  out.kernel_basis = detail::kernel_from_rref(coefficient, cols);
  out.particular = std::move(x);
  out.status = out.kernel_basis.empty() ? SolveStatus::Unique : SolveStatus::Affine;
  return out;
}

// True iff the two lists span the same subspace.
template <typename Scalar>
bool same_span(const std::vector<VectorX<Scalar>>& a, const std::vector<VectorX<Scalar>>& b) {
  const auto stack = [](const std::vector<VectorX<Scalar>>& vs, Eigen::Index dim) {
    MatrixX<Scalar> m(static_cast<Eigen::Index>(vs.size()), dim);
    for (std::size_t i = 0; i < vs.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = vs[i].transpose();
    return m;
  };
  if (a.empty() || b.empty()) {
    const auto& other = a.empty() ? b : a;
    return other.empty() || rank(stack(other, other[0].size())) == 0;
  }
  const Eigen::Index dim = a[0].size();
  std::vector<VectorX<Scalar>> both = a;
  both.insert(both.end(), b.begin(), b.end());
  const Eigen::Index ra = rank(stack(a, dim));
  return ra == rank(stack(b, dim)) && ra == rank(stack(both, dim));
}

// Fraction-free (Bareiss) determinant for an integral domain scalar; every
// division is exact. Rows are swapped when the pivot vanishes.
template <typename Derived>
typename Derived::Scalar bareiss_determinant(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  if (input.rows() != input.cols()) throw InvalidDimension("determinant of a non-square matrix");
  MatrixX<Scalar> m = input;
  const Eigen::Index n = m.rows();
  if (n == 0) return Scalar(1);
  Scalar previous(1);
  bool negate = false;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == Scalar(0)) {
      Eigen::Index swap = k + 1;
      while (swap < n && m(swap, k) == Scalar(0)) ++swap;
      if (swap == n) return Scalar(0);
      m.row(k).swap(m.row(swap));
      negate = !negate;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
      }
      m(i, k) = Scalar(0);
    }
    previous = m(k, k);
  }
  return negate ? Scalar(-m(n - 1, n - 1)) : m(n - 1, n - 1);
}

// Exact determinant: each row is scaled to integers, Bareiss runs over the
// integers and the scale factor is divided back out.
Rational det_exact(const MatrixQ& m);

}  // namespace cyclicsign
