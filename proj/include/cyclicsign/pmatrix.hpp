#pragma once

#include "cyclicsign/cyclic_matrix.hpp"
#include "cyclicsign/index.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace cyclicsign {

// Smallest k with a_rr > a_rk for every row r != k, if any.
std::optional<int> check_pre_k_gaps(const CyclicMatrix& a);
// Every k satisfying the same condition, ascending.
std::vector<int> all_pre_k_gap_indices(const CyclicMatrix& a);

// a_ii > a_{i[i+1]} on every row.
bool check_strong_motzkin(const CyclicMatrix& a);

struct KrProfile {
  std::vector<int> k;                   // k[r-1] = k_r
  std::vector<IndexSet> leading_block;  // {r, [r+1], ..., [r+k_r]}, sorted
};

// k_r is the largest k in {0, ..., n-1} with a_rr = a_{r[r+k]}.
KrProfile kr_profile(const CyclicMatrix& a);

// For every row r with k_r > 0: a_ss > a_sr for s = [r+1], ..., [r+k_r].
bool check_necessary_condition(const CyclicMatrix& a);

// a_rr plus the sum of the negative entries of row r is positive, every r.
bool check_weakened_row_condition(const CyclicMatrix& a);

// a >= 0, Ae > 0 and a pre-k-gap index exists.
bool check_sufficient_pmatrix(const CyclicMatrix& a);

struct PMatrixReport {
  bool is_p_matrix;
  std::optional<IndexSet> witness;  // first principal set with minor <= 0
  std::uint64_t minors_checked;
};

inline constexpr int kMaxExactPMatrixDimension = 12;

struct PMatrixOptions {
#ifdef NDEBUG
  bool verify_with_oracle = false;
#else
  bool verify_with_oracle = true;
#endif
};

// Walks every non-empty principal index set by size, then lexicographically,
// taking each minor's sign from det_sign on the principal submatrix. Stops at
// the first minor <= 0. Throws SizeLimitExceeded for n > 12.
PMatrixReport is_p_matrix_exact(const CyclicMatrix& a, PMatrixOptions options = {});

// The principal index sets of {1..n} in the enumeration order used above.
std::vector<IndexSet> principal_index_sets(int n);

}  // namespace cyclicsign
