#pragma once

#include "cyclicsign/cyclic_matrix.hpp"
#include "cyclicsign/index.hpp"

#include <Eigen/Core>

#include <optional>
#include <string>
#include <vector>

namespace cyclicsign {

// 0-1 matrix with a 1 at every entry that sits right after a strict drop in
// its row, the row being read cyclically (the entry before a_i1 is a_in).
template <typename Derived>
Eigen::MatrixXi gap_adjacency(const Eigen::MatrixBase<Derived>& a) {
  const Eigen::Index n = a.rows();
  Eigen::MatrixXi kappa = Eigen::MatrixXi::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const Eigen::Index prev = (j + n - 1) % n;
      if (a(i, prev) > a(i, j)) kappa(i, j) = 1;
    }
  }
  return kappa;
}

// Directed graph on {1, ..., n} with an edge i -> j iff kappa(i-1, j-1) = 1.
class GapGraph {
 public:
  // Throws InvalidArgument unless kappa is square 0-1 with a zero diagonal.
  explicit GapGraph(Eigen::MatrixXi kappa);

  int n() const { return static_cast<int>(kappa_.rows()); }
  const Eigen::MatrixXi& kappa() const { return kappa_; }
  bool has_edge(int from, int to) const { return kappa_(from - 1, to - 1) != 0; }
  // Ascending 1-based successors of vertex i.
  const std::vector<int>& out_edges(int i) const { return out_edges_[static_cast<std::size_t>(i - 1)]; }

 private:
  Eigen::MatrixXi kappa_;
  std::vector<std::vector<int>> out_edges_;
};

GapGraph build_gap_graph(const CyclicMatrix& a);

struct SccComponent {
  IndexSet vertices;
  bool closed;  // no edge leaves the component
};

struct SccPartition {
  std::vector<SccComponent> components;  // sorted by smallest member
  IndexSet closed_union;                 // C
  IndexSet open_union;                   // D

  std::vector<IndexSet> closed_components() const;
  std::size_t closed_count() const;
};

// Iterative Tarjan; output order is independent of traversal order.
SccPartition scc_partition(const GapGraph& g);

struct ReachabilitySets {
  int root;
  // by_step[t] = G_{r,t}: positions k such that some length-t path runs from
  // the root to vertex [k+1].
  std::vector<IndexSet> by_step;
  IndexSet closure;  // union over all t
};

// G_r = {k : a_rk > a_r[k+1]}; each is the predecessor position of an
// out-neighbour of r.
IndexSet gap_positions(const CyclicMatrix& a, int r);

// by_step is recorded until the cumulative union stops growing (at most n+1
// rounds) or until max_steps+1 entries exist, whichever comes first. The
// closure is always computed to its fixpoint.
ReachabilitySets reachability_sets(const CyclicMatrix& a, int r,
                                   std::optional<int> max_steps = std::nullopt);

// True iff every pair of closures G_{r,inf}, G_{s,inf} intersects; equivalent
// to the gap graph having exactly one closed component.
bool check_connected_condition(const CyclicMatrix& a);

// Graphviz digraph; closed components are drawn as solid clusters, open ones
// as dashed clusters.
std::string to_dot(const GapGraph& g, const SccPartition& p);

}  // namespace cyclicsign
