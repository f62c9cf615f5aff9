#pragma once

#include "cyclicsign/errors.hpp"
#include "cyclicsign/index.hpp"
#include "cyclicsign/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cyclicsign {

// A break of the cyclic weak decrease in one row: entry (row, column) is
// strictly smaller than the entry (row, next_column) that follows it.
struct ClassViolation {
  int row;
  int column;
  int next_column;

  friend bool operator==(const ClassViolation&, const ClassViolation&) = default;
};

// Scans every row for a_{i[i+k]} >= a_{i[i+k+1]}, k = 0..n-2. Works for any
// ordered scalar; indices in the result are 1-based.
template <typename Derived>
std::vector<ClassViolation> cyclic_decrease_violations(const Eigen::MatrixBase<Derived>& m) {
  std::vector<ClassViolation> out;
  const int n = static_cast<int>(m.rows());
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k + 1 < n; ++k) {
      const int c = (i + k) % n;
      const int next = (i + k + 1) % n;
      if (m(i, c) < m(i, next)) out.push_back({i + 1, c + 1, next + 1});
    }
  }
  return out;
}

// A square rational matrix whose rows weakly decrease cyclically from the
// diagonal: a_ii >= a_{i,i+1} >= ... >= a_in >= a_i1 >= ... >= a_{i,i-1}.
// Only obtainable through validation, so holding one is proof of membership.
class CyclicMatrix {
 public:
  // Throws NotInClass (see below) when m violates the row condition.
  explicit CyclicMatrix(MatrixQ m);

  int n() const { return static_cast<int>(m_.rows()); }
  const MatrixQ& matrix() const { return m_; }

  // 1-based entry a_ij; both indices are wrapped cyclically.
  const Rational& operator()(long long i, long long j) const {
    return m_(wrap_index(i, n()) - 1, wrap_index(j, n()) - 1);
  }

  friend bool operator==(const CyclicMatrix& a, const CyclicMatrix& b) {
    return a.m_.rows() == b.m_.rows() && a.m_ == b.m_;
  }

 private:
  MatrixQ m_;
};

class NotInClass : public InvalidArgument {
 public:
  explicit NotInClass(std::vector<ClassViolation> violations);
  const std::vector<ClassViolation>& violations() const { return violations_; }

 private:
  std::vector<ClassViolation> violations_;
};

struct ClassCheck {
  std::optional<CyclicMatrix> matrix;     // set iff accepted
  std::vector<ClassViolation> violations;  // every violation, row-major order

  bool accepted() const { return matrix.has_value(); }
};

// Throws InvalidDimension for non-square or empty input.
ClassCheck validate_class(const MatrixQ& m);

enum class RowSumSign { AllPositive, AllNegative, Mixed };

struct RowSumClass {
  RowSumSign tag;
  VectorQ sums;
};

RowSumClass row_sum_class(const CyclicMatrix& a);
std::string to_string(RowSumSign tag);

// Rows and columns restricted to `keep` (ascending). Throws InvalidArgument if
// keep is empty or reaches past n.
CyclicMatrix principal_submatrix(const CyclicMatrix& a, const IndexSet& keep);

// The n x n matrix of all ones.
CyclicMatrix all_ones_matrix(int n);
CyclicMatrix identity_matrix(int n);

// Same entries restricted to an arbitrary (row set, column set) pair.
MatrixQ submatrix(const MatrixQ& m, const IndexSet& rows, const IndexSet& cols);
// Entries of v at `keep`, in ascending order.
VectorQ subvector(const VectorQ& v, const IndexSet& keep);
// Length-n vector equal to `values` on `support` and zero elsewhere.
VectorQ zero_extend(const VectorQ& values, const IndexSet& support, int n);

bool is_nonnegative(const CyclicMatrix& a);
bool is_negative(const CyclicMatrix& a);

}  // namespace cyclicsign
