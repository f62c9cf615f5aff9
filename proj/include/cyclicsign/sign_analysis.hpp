#pragma once

#include "cyclicsign/cyclic_matrix.hpp"
#include "cyclicsign/gap_graph.hpp"
#include "cyclicsign/index.hpp"
#include "cyclicsign/rational.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace cyclicsign {

enum class ClosedSccKind { Fundamental, Null };
enum class SolutionSign { NonNegative, NonPositive };

// Outcome of the restricted system [A]^T_CC xi = e_C for one closed component
// C. A solvable system has exactly one solution, strictly one-signed on C.
struct ClosedSccAnalysis {
  IndexSet component;
  ClosedSccKind kind;
  std::optional<VectorQ> fundamental_solution;  // length n, zero off C
  std::optional<SolutionSign> sign;
  std::vector<VectorQ> null_basis;  // length n, zero off C; each lies in ker A^T
};

// Throws InvalidArgument if c is not a closed component of the gap graph.
// Throws InternalError if uniqueness or strict one-signedness fails.
ClosedSccAnalysis analyze_closed_scc(const CyclicMatrix& a, const IndexSet& c);

// Every solution of A^T x = lambda e is
//   sum_i alpha_i x_i + sum_j y_j,  sum_i alpha_i = lambda,
// with x_i the fundamental solutions and y_j null vectors of the null
// components.
struct SolutionSpace {
  Rational lambda;
  std::vector<ClosedSccAnalysis> fundamental;
  std::vector<ClosedSccAnalysis> null;
  // lambda * x_1 if there is a fundamental component, the zero vector if
  // lambda = 0 and there is none; absent when infeasible.
  std::optional<VectorQ> canonical_particular;
  bool feasible;
};

SolutionSpace solution_space(const CyclicMatrix& a, const Rational& lambda);

// Splits a solution x of A^T x = lambda e along the closed components.
struct SolutionDecomposition {
  std::vector<Rational> alphas;    // one per fundamental component
  std::vector<VectorQ> null_parts;  // one per null component, restriction of x
};

// Throws InvalidArgument if x is not of the form described by `space`.
SolutionDecomposition decompose_solution(const SolutionSpace& space, const VectorQ& x);
VectorQ reassemble(const SolutionSpace& space, const SolutionDecomposition& d);

enum class SignCase { TwoOrMoreClosed, OneClosedNull, OneClosedPositive, OneClosedNegative };
std::string to_string(SignCase c);

struct TwoClosedComponents {
  IndexSet first;
  IndexSet second;
};
struct KernelVector {
  VectorQ v;  // nonzero, A^T v = 0
};
struct FundamentalSolution {
  VectorQ x;  // A^T x = e, one-signed
};
using SignCertificate = std::variant<TwoClosedComponents, KernelVector, FundamentalSolution>;

struct SignReport {
  SignCase sign_case;
  int sign;  // sign of det A
  SignCertificate certificate;
  // Row sums were all positive (or all negative) with one closed component,
  // which fixes the sign before the certificate is computed.
  bool row_sum_shortcut = false;
};

SignReport det_sign(const CyclicMatrix& a);

// Re-checks a certificate with exact arithmetic only, independent of the
// code that produced it.
bool verify_certificate(const CyclicMatrix& a, const SignReport& report);

// Constructive semi-positivity witness for the open part of the gap graph.
struct MSemipositivityWitness {
  MatrixQ m_matrix;          // m_ij = a_ij - a_{i[j-1]}
  IndexSet open_union;       // D
  std::vector<int> ordering;  // i_1, ..., i_d
  VectorQ z;                 // indexed like open_union (ascending)
};

// nullopt when every component is closed. Throws InternalError if any
// witness invariant fails.
std::optional<MSemipositivityWitness> m_matrix_witness(const CyclicMatrix& a);

// For row sums all positive (resp. all negative) and e^T z < 0, returns a
// row r' with (Az)_{r'} < 0 (resp. > 0). Throws InvalidArgument when the
// preconditions fail.
int motzkin_row_locator(const CyclicMatrix& a, const VectorQ& z);

}  // namespace cyclicsign
