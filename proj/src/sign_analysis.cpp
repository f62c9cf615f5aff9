#include "cyclicsign/sign_analysis.hpp"

#include "cyclicsign/errors.hpp"
#include "cyclicsign/linear_exact.hpp"

#include <algorithm>

namespace cyclicsign {
namespace {

ClosedSccAnalysis analyze_component(const CyclicMatrix& a, const IndexSet& c) {
  const int n = a.n();
  const MatrixQ restricted_t = submatrix(a.matrix(), c, c).transpose();
  const auto result = solve(restricted_t, ones(static_cast<Eigen::Index>(c.size())));

  ClosedSccAnalysis out{c, ClosedSccKind::Null, std::nullopt, std::nullopt, {}};
  switch (result.status) {
    case SolveStatus::Unique: {
      const VectorQ& xi = *result.particular;
      if (all_positive(xi)) {
        out.sign = SolutionSign::NonNegative;
      } else if (all_negative(xi)) {
        out.sign = SolutionSign::NonPositive;
      } else {
        throw InternalError("fundamental solution is not strictly one-signed on its component");
      }
      out.kind = ClosedSccKind::Fundamental;
      out.fundamental_solution = zero_extend(xi, c, n);
      if (a.matrix().transpose() * *out.fundamental_solution != ones(n)) {
        throw InternalError("zero-extended fundamental solution does not solve A^T x = e");
      }
      return out;
    }
    case SolveStatus::Affine:
      throw InternalError("restricted system on a closed component has more than one solution");
    case SolveStatus::Infeasible: {
      const auto basis = kernel_basis(restricted_t);
      if (basis.empty()) throw InternalError("null component with a trivial kernel");
      for (const auto& y : basis) {
        VectorQ full = zero_extend(y, c, n);
        if (!is_zero(a.matrix().transpose() * full)) {
          throw InternalError("null vector of a closed component is not in ker A^T");
        }
        out.null_basis.push_back(std::move(full));
      }
      return out;
    }
  }
  return out;
}

// Every out-edge of every member stays inside the set.
bool closed_under_gaps(const CyclicMatrix& a, const IndexSet& s) {
  const auto kappa = gap_adjacency(a.matrix());
  for (int i : s) {
    for (int j = 1; j <= a.n(); ++j) {
      if (kappa(i - 1, j - 1) != 0 && !s.contains(j)) return false;
    }
  }
  return true;
}

}  // namespace

ClosedSccAnalysis analyze_closed_scc(const CyclicMatrix& a, const IndexSet& c) {
  const auto partition = scc_partition(build_gap_graph(a));
  const auto closed = partition.closed_components();
  if (std::find(closed.begin(), closed.end(), c) == closed.end()) {
    throw InvalidArgument("index set is not a closed strongly connected component");
  }
  return analyze_component(a, c);
}

SolutionSpace solution_space(const CyclicMatrix& a, const Rational& lambda) {
  const auto partition = scc_partition(build_gap_graph(a));
  SolutionSpace out{lambda, {}, {}, std::nullopt, false};
  for (const auto& c : partition.closed_components()) {
    auto analysis = analyze_component(a, c);
    auto& bucket = analysis.kind == ClosedSccKind::Fundamental ? out.fundamental : out.null;
    bucket.push_back(std::move(analysis));
  }
  if (!out.fundamental.empty()) {
    out.feasible = true;
    out.canonical_particular = VectorQ(lambda * *out.fundamental.front().fundamental_solution);
  } else if (lambda == 0) {
    out.feasible = true;
    out.canonical_particular = VectorQ::Zero(a.n());
  }
  return out;
}

SolutionDecomposition decompose_solution(const SolutionSpace& space, const VectorQ& x) {
  const Eigen::Index n = space.fundamental.empty()
                             ? (space.null.empty() ? x.size() : space.null.front().null_basis.front().size())
                             : space.fundamental.front().fundamental_solution->size();
  if (x.size() != n) throw InvalidArgument("vector length does not match the matrix dimension");
  SolutionDecomposition out;
  VectorQ covered = VectorQ::Zero(x.size());
  Rational total = 0;
  for (const auto& f : space.fundamental) {
    const VectorQ& xi = *f.fundamental_solution;
    const int anchor = f.component.front();
    const Rational alpha = x(anchor - 1) / xi(anchor - 1);
    for (int j : f.component) {
      if (x(j - 1) != alpha * xi(j - 1)) {
        throw InvalidArgument("vector is not a multiple of the fundamental solution on its component");
      }
    }
    out.alphas.push_back(alpha);
    total += alpha;
    covered += alpha * xi;
  }
  if (total != space.lambda) throw InvalidArgument("coefficients do not sum to lambda");
  for (const auto& nc : space.null) {
    VectorQ part = zero_extend(subvector(x, nc.component), nc.component, static_cast<int>(x.size()));
    std::vector<VectorQ> with_part = nc.null_basis;
    with_part.push_back(part);
    if (!same_span(nc.null_basis, with_part)) {
      throw InvalidArgument("vector is not a null vector on a null component");
    }
    covered += part;
    out.null_parts.push_back(std::move(part));
  }
  if (covered != x) throw InvalidArgument("vector has support outside the closed components");
  return out;
}

VectorQ reassemble(const SolutionSpace& space, const SolutionDecomposition& d) {
  if (d.alphas.size() != space.fundamental.size() || d.null_parts.size() != space.null.size()) {
    throw InvalidArgument("decomposition does not match the solution space");
  }
  const Eigen::Index n = space.fundamental.empty()
                             ? (d.null_parts.empty() ? 0 : d.null_parts.front().size())
                             : space.fundamental.front().fundamental_solution->size();
  VectorQ x = VectorQ::Zero(n);
  for (std::size_t i = 0; i < d.alphas.size(); ++i) x += d.alphas[i] * *space.fundamental[i].fundamental_solution;
  for (const auto& y : d.null_parts) x += y;
  return x;
}

std::string to_string(SignCase c) {
  switch (c) {
    case SignCase::TwoOrMoreClosed: return "TwoOrMoreClosed";
    case SignCase::OneClosedNull: return "OneClosedNull";
    case SignCase::OneClosedPositive: return "OneClosedPositive";
    case SignCase::OneClosedNegative: return "OneClosedNegative";
  }
  return "";
}

SignReport det_sign(const CyclicMatrix& a) {
  const auto partition = scc_partition(build_gap_graph(a));
  const auto closed = partition.closed_components();
  if (closed.size() >= 2) {
    return {SignCase::TwoOrMoreClosed, 0, TwoClosedComponents{closed[0], closed[1]}, false};
  }

  const RowSumSign rows = row_sum_class(a).tag;
  const auto analysis = analyze_component(a, closed.front());
  SignReport report;
  if (analysis.kind == ClosedSccKind::Null) {
    if (rows != RowSumSign::Mixed) {
      throw InternalError("null closed component despite one-signed row sums");
    }
    report = {SignCase::OneClosedNull, 0, KernelVector{analysis.null_basis.front()}, false};
    return report;
  }
  const bool positive = *analysis.sign == SolutionSign::NonNegative;
  report = {positive ? SignCase::OneClosedPositive : SignCase::OneClosedNegative, positive ? 1 : -1,
            FundamentalSolution{*analysis.fundamental_solution}, rows != RowSumSign::Mixed};
  if ((rows == RowSumSign::AllPositive && !positive) || (rows == RowSumSign::AllNegative && positive)) {
    throw InternalError("fundamental solution sign disagrees with the row-sum sign");
  }
  return report;
}

bool verify_certificate(const CyclicMatrix& a, const SignReport& report) {
  const MatrixQ at = a.matrix().transpose();
  const int n = a.n();
  if (const auto* two = std::get_if<TwoClosedComponents>(&report.certificate)) {
    return report.sign == 0 && report.sign_case == SignCase::TwoOrMoreClosed && !two->first.empty() &&
           !two->second.empty() && two->first.back() <= n && two->second.back() <= n &&
           two->first.disjoint(two->second) && closed_under_gaps(a, two->first) &&
           closed_under_gaps(a, two->second);
  }
  if (const auto* kv = std::get_if<KernelVector>(&report.certificate)) {
    return report.sign == 0 && report.sign_case == SignCase::OneClosedNull && kv->v.size() == n &&
           !is_zero(kv->v) && is_zero(at * kv->v);
  }
  const auto& fs = std::get<FundamentalSolution>(report.certificate);
  if (fs.x.size() != n || at * fs.x != ones(n)) return false;
  if (report.sign == 1) return report.sign_case == SignCase::OneClosedPositive && all_nonnegative(fs.x);
  if (report.sign == -1) return report.sign_case == SignCase::OneClosedNegative && all_nonpositive(fs.x);
  return false;
}

std::optional<MSemipositivityWitness> m_matrix_witness(const CyclicMatrix& a) {
  const int n = a.n();
  const auto graph = build_gap_graph(a);
  const auto partition = scc_partition(graph);
  if (partition.open_union.empty()) return std::nullopt;

  MSemipositivityWitness w;
  w.open_union = partition.open_union;
  w.m_matrix = MatrixQ(n, n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) w.m_matrix(i - 1, j - 1) = a(i, j) - a(i, j - 1);
  }
  const MatrixQ& m = w.m_matrix;
  const IndexSet& d = w.open_union;

  if (!is_zero(m * ones(n))) throw InternalError("M e != 0");
  for (int i : d) {
    if (m(i - 1, i - 1) <= 0) throw InternalError("[M]_DD has a non-positive diagonal entry");
    for (int j : d) {
      if (i != j && m(i - 1, j - 1) > 0) throw InternalError("[M]_DD is not a Z-matrix");
    }
  }

  // Each next index must have a gap edge into C or into an earlier pick.
  IndexSet reached = partition.closed_union;
  std::vector<bool> used(d.size(), false);
  for (std::size_t step = 0; step < d.size(); ++step) {
    std::size_t pick = d.size();
    for (std::size_t k = 0; k < d.size() && pick == d.size(); ++k) {
      if (used[k]) continue;
      const auto& succ = graph.out_edges(d[k]);
      if (std::any_of(succ.begin(), succ.end(), [&](int j) { return reached.contains(j); })) pick = k;
    }
    if (pick == d.size()) throw InternalError("open vertices admit no admissible ordering");
    used[pick] = true;
    w.ordering.push_back(d[pick]);
    reached = reached.united(IndexSet{d[pick]});
  }

  w.z = VectorQ::Zero(static_cast<Eigen::Index>(d.size()));
  auto z_at = [&](int vertex) -> Rational& { return w.z(d.position(vertex)); };
  for (std::size_t k = 0; k < w.ordering.size(); ++k) {
    const int ik = w.ordering[k];
    Rational s = 0;
    for (std::size_t l = 0; l < w.ordering.size(); ++l) {
      const int il = w.ordering[l];
      s += l < k ? Rational(m(ik - 1, il - 1) * z_at(il)) : m(ik - 1, il - 1);
    }
    const Rational& mkk = m(ik - 1, ik - 1);
    if (!(s > 0 && s <= mkk)) throw InternalError("z recursion left the range (0, m_kk]");
    z_at(ik) = Rational(1) - s / (2 * mkk);
  }

  for (Eigen::Index k = 0; k < w.z.size(); ++k) {
    if (!(w.z(k) > 0 && w.z(k) < 1)) throw InternalError("witness z is not strictly inside (0, 1)");
  }
  if (!all_positive(submatrix(m, d, d) * w.z)) throw InternalError("[M]_DD z is not strictly positive");
  return w;
}

int motzkin_row_locator(const CyclicMatrix& a, const VectorQ& z) {
  const int n = a.n();
  if (z.size() != n) throw InvalidArgument("motzkin_row_locator: z has the wrong length");
  const RowSumSign rows = row_sum_class(a).tag;
  if (rows == RowSumSign::Mixed) {
    throw InvalidArgument("motzkin_row_locator: row sums must be all positive or all negative");
  }
  const Rational total = z.sum();
  if (total >= 0) throw InvalidArgument("motzkin_row_locator: requires e^T z < 0");

  // Partial sums of the centred vector y = z - mean(z); the best prefix end r
  // makes every cyclic partial sum starting after r one-signed.
  const Rational mean = total / n;
  const bool maximize = rows == RowSumSign::AllPositive;
  Rational running = 0;
  Rational best = 0;
  int r = 0;
  for (int i = 1; i <= n; ++i) {
    running += z(i - 1) - mean;
    if (r == 0 || (maximize ? running > best : running < best)) {
      best = running;
      r = i;
    }
  }
  const int located = wrap_index(r + 1, n);
  const Rational value = (a.matrix().row(located - 1) * z)(0);
  if (maximize ? !(value < 0) : !(value > 0)) {
    throw InternalError("located row does not have the required strict sign");
  }
  return located;
}

}  // namespace cyclicsign
