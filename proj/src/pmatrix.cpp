#include "cyclicsign/pmatrix.hpp"

#include "cyclicsign/errors.hpp"
#include "cyclicsign/linear_exact.hpp"
#include "cyclicsign/sign_analysis.hpp"

namespace cyclicsign {
namespace {

bool pre_k_gap_holds(const CyclicMatrix& a, int k) {
  for (int r = 1; r <= a.n(); ++r) {
    if (r != k && !(a(r, r) > a(r, k))) return false;
  }
  return true;
}

// Visits the size-`size` subsets of {1..n} in lexicographic order; stops
// early when visit returns false.
template <typename Visit>
bool for_each_subset(int n, int size, Visit&& visit) {
  std::vector<int> pick(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) pick[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    if (!visit(IndexSet(pick))) return false;
    int pos = size - 1;
    while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == n - size + pos + 1) --pos;
    if (pos < 0) return true;
    ++pick[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < size; ++i) {
      pick[static_cast<std::size_t>(i)] = pick[static_cast<std::size_t>(i - 1)] + 1;
    }
  }
}

}  // namespace

std::optional<int> check_pre_k_gaps(const CyclicMatrix& a) {
  for (int k = 1; k <= a.n(); ++k) {
    if (pre_k_gap_holds(a, k)) return k;
  }
  return std::nullopt;
}

std::vector<int> all_pre_k_gap_indices(const CyclicMatrix& a) {
  std::vector<int> out;
  for (int k = 1; k <= a.n(); ++k) {
    if (pre_k_gap_holds(a, k)) out.push_back(k);
  }
  return out;
}

bool check_strong_motzkin(const CyclicMatrix& a) {
  for (int i = 1; i <= a.n(); ++i) {
    if (!(a(i, i) > a(i, i + 1))) return false;
  }
  return true;
}

KrProfile kr_profile(const CyclicMatrix& a) {
  const int n = a.n();
  KrProfile out;
  for (int r = 1; r <= n; ++r) {
    int k = 0;
    while (k + 1 <= n - 1 && a(r, r + k + 1) == a(r, r)) ++k;
    std::vector<int> block;
    for (int t = 0; t <= k; ++t) block.push_back(wrap_index(r + t, n));
    out.k.push_back(k);
    out.leading_block.emplace_back(std::move(block));
  }
  return out;
}

bool check_necessary_condition(const CyclicMatrix& a) {
  const auto profile = kr_profile(a);
  for (int r = 1; r <= a.n(); ++r) {
    for (int t = 1; t <= profile.k[static_cast<std::size_t>(r - 1)]; ++t) {
      const int s = wrap_index(r + t, a.n());
      if (!(a(s, s) > a(s, r))) return false;
    }
  }
  return true;
}

bool check_weakened_row_condition(const CyclicMatrix& a) {
  for (int r = 1; r <= a.n(); ++r) {
    Rational total = a(r, r);
    for (int j = 1; j <= a.n(); ++j) {
      if (a(r, j) < 0) total += a(r, j);
    }
    if (total <= 0) return false;
  }
  return true;
}

bool check_sufficient_pmatrix(const CyclicMatrix& a) {
  return is_nonnegative(a) && row_sum_class(a).tag == RowSumSign::AllPositive &&
         check_pre_k_gaps(a).has_value();
}

std::vector<IndexSet> principal_index_sets(int n) {
  std::vector<IndexSet> out;
  for (int size = 1; size <= n; ++size) {
    for_each_subset(n, size, [&](IndexSet s) {
      out.push_back(std::move(s));
      return true;
    });
  }
  return out;
}

PMatrixReport is_p_matrix_exact(const CyclicMatrix& a, PMatrixOptions options) {
  const int n = a.n();
  if (n > kMaxExactPMatrixDimension) {
    throw SizeLimitExceeded("exact P-matrix test is limited to n <= " +
                            std::to_string(kMaxExactPMatrixDimension) + ", got n = " + std::to_string(n));
  }
  PMatrixReport report{true, std::nullopt, 0};
  for (int size = 1; size <= n && report.is_p_matrix; ++size) {
    for_each_subset(n, size, [&](const IndexSet& keep) {
      const CyclicMatrix sub = principal_submatrix(a, keep);
      const int s = det_sign(sub).sign;
      ++report.minors_checked;
      if (options.verify_with_oracle && sign(det_exact(sub.matrix())) != s) {
        throw InternalError("certified minor sign disagrees with the exact determinant");
      }
      if (s <= 0) {
        report.is_p_matrix = false;
        report.witness = keep;
        return false;
      }
      return true;
    });
  }
  return report;
}

}  // namespace cyclicsign
