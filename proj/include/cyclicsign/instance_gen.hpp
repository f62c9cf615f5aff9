#pragma once

#include "cyclicsign/cyclic_matrix.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <random>
#include <vector>

namespace cyclicsign {

enum class RowSumMode { Any, ForcePositive, ForceNegative };

struct GenConfig {
  int n = 5;
  int entry_bound = 5;        // draws from [-bound, bound], or [0, bound]
  bool non_negative = false;
  RowSumMode row_sum = RowSumMode::Any;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;   // independent sub-sequence for the same seed
};

// Throws InvalidArgument for n < 1, bound < 1, or non_negative together with
// ForceNegative (no non-negative matrix has negative row sums).
void validate(const GenConfig& config);

// Seed-to-sequence mapping: std::mt19937_64 seeded through std::seed_seq with
// the four 32-bit halves of (seed, stream). Stable for a given standard
// library build.
std::mt19937_64 make_engine(const GenConfig& config);

// Each row draws n integers, sorts them in decreasing order and lays them out
// cyclically from the diagonal. Row-sum forcing adds (or subtracts) the
// smallest integer constant to every entry that makes all sums strictly
// positive (negative); the gap pattern is unchanged by such a shift.
CyclicMatrix generate(const GenConfig& config);

// A class member whose gap adjacency equals `pattern` exactly. n is taken
// from the pattern. Throws InvalidArgument unless pattern is square 0-1 with
// a zero diagonal.
CyclicMatrix generate_with_gap_pattern(const Eigen::MatrixXi& pattern, const GenConfig& config);

// Non-negative rows with a_ii = a_{i[i+1]} > a_{i[i+2]} > ... > a_{i[i-1]} >= 0.
// Such matrices are P-matrices although no pre-k-gap index exists. Steps
// between consecutive entries are drawn from [1, bound]. Throws
// InvalidArgument for n < 3.
CyclicMatrix generate_leading_tie(const GenConfig& config);

// Zero-diagonal 0-1 matrix with each off-diagonal entry set independently
// with probability edge_probability.
Eigen::MatrixXi random_gap_pattern(int n, double edge_probability, std::mt19937_64& engine);

// Adds `shift` to every entry.
CyclicMatrix shifted(const CyclicMatrix& a, const Rational& shift);

// Candidate reductions of a failing instance, each still in the class: every
// principal submatrix of size n-1, then every single entry moved one step
// toward zero (to its integer part when fractional).
std::vector<CyclicMatrix> shrink_candidates(const CyclicMatrix& a);

}  // namespace cyclicsign
