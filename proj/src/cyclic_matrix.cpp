#include "cyclicsign/cyclic_matrix.hpp"

#include <sstream>

namespace cyclicsign {
namespace {

void require_square(const MatrixQ& m) {
  if (m.rows() < 1 || m.rows() != m.cols()) {
    throw InvalidDimension("matrix must be square with n >= 1, got " +
                           std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

std::string describe(const std::vector<ClassViolation>& violations) {
  std::ostringstream os;
  os << "matrix rows do not weakly decrease cyclically from the diagonal ("
     << violations.size() << " violation" << (violations.size() == 1 ? "" : "s") << ")";
  return os.str();
}

}  // namespace

NotInClass::NotInClass(std::vector<ClassViolation> violations)
    : InvalidArgument(describe(violations)), violations_(std::move(violations)) {}

CyclicMatrix::CyclicMatrix(MatrixQ m) : m_(std::move(m)) {
  require_square(m_);
  auto violations = cyclic_decrease_violations(m_);
  if (!violations.empty()) throw NotInClass(std::move(violations));
}

ClassCheck validate_class(const MatrixQ& m) {
  require_square(m);
  ClassCheck check;
  check.violations = cyclic_decrease_violations(m);
  if (check.violations.empty()) check.matrix.emplace(m);
  return check;
}

RowSumClass row_sum_class(const CyclicMatrix& a) {
  RowSumClass out;
  out.sums = a.matrix().rowwise().sum();
  if (all_positive(out.sums)) {
    out.tag = RowSumSign::AllPositive;
  } else if (all_negative(out.sums)) {
    out.tag = RowSumSign::AllNegative;
  } else {
    out.tag = RowSumSign::Mixed;
  }
  return out;
}

std::string to_string(RowSumSign tag) {
  switch (tag) {
    case RowSumSign::AllPositive: return "AllPositive";
    case RowSumSign::AllNegative: return "AllNegative";
    case RowSumSign::Mixed: return "Mixed";
  }
  return "Mixed";
}

MatrixQ submatrix(const MatrixQ& m, const IndexSet& rows, const IndexSet& cols) {
  if ((!rows.empty() && rows.back() > m.rows()) || (!cols.empty() && cols.back() > m.cols())) {
    throw InvalidIndex("submatrix index out of range");
  }
  MatrixQ out(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m(rows[r] - 1, cols[c] - 1);
    }
  }
  return out;
}

VectorQ subvector(const VectorQ& v, const IndexSet& keep) {
  VectorQ out(static_cast<Eigen::Index>(keep.size()));
  for (std::size_t k = 0; k < keep.size(); ++k) {
    out(static_cast<Eigen::Index>(k)) = v(keep[k] - 1);
  }
  return out;
}

VectorQ zero_extend(const VectorQ& values, const IndexSet& support, int n) {
  if (static_cast<std::size_t>(values.size()) != support.size()) {
    throw InvalidArgument("zero_extend: value count does not match support size");
  }
  VectorQ out = VectorQ::Zero(n);
  for (std::size_t k = 0; k < support.size(); ++k) {
    out(support[k] - 1) = values(static_cast<Eigen::Index>(k));
  }
  return out;
}

CyclicMatrix principal_submatrix(const CyclicMatrix& a, const IndexSet& keep) {
  if (keep.empty()) throw InvalidArgument("principal_submatrix: empty index set");
  if (keep.back() > a.n()) throw InvalidIndex("principal_submatrix: index beyond n");
  auto check = validate_class(submatrix(a.matrix(), keep, keep));
  // Dropping a column keeps each remaining row's cyclic order intact.
  if (!check.accepted()) {
    throw InternalError("principal submatrix left the cyclically decreasing class");
  }
  return std::move(*check.matrix);
}

CyclicMatrix all_ones_matrix(int n) {
  if (n < 1) throw InvalidDimension("dimension must be >= 1");
  return CyclicMatrix(MatrixQ::Constant(n, n, Rational(1)));
}

CyclicMatrix identity_matrix(int n) {
  if (n < 1) throw InvalidDimension("dimension must be >= 1");
  return CyclicMatrix(MatrixQ::Identity(n, n));
}

bool is_nonnegative(const CyclicMatrix& a) {
  const auto& m = a.matrix();
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    if (m(i) < 0) return false;
  }
  return true;
}

bool is_negative(const CyclicMatrix& a) {
  const auto& m = a.matrix();
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    if (m(i) >= 0) return false;
  }
  return true;
}

}  // namespace cyclicsign
