#include "cyclicsign/gap_graph.hpp"

#include "cyclicsign/errors.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace cyclicsign {

GapGraph::GapGraph(Eigen::MatrixXi kappa) : kappa_(std::move(kappa)) {
  const Eigen::Index n = kappa_.rows();
  if (n < 1 || kappa_.cols() != n) throw InvalidDimension("gap graph adjacency must be square, n >= 1");
  out_edges_.resize(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    if (kappa_(i, i) != 0) {
      throw InvalidArgument("gap graph adjacency has a self-loop at vertex " + std::to_string(i + 1));
    }
    for (Eigen::Index j = 0; j < n; ++j) {
      const int v = kappa_(i, j);
      if (v != 0 && v != 1) throw InvalidArgument("gap graph adjacency must be 0-1");
      if (v == 1) out_edges_[static_cast<std::size_t>(i)].push_back(static_cast<int>(j) + 1);
    }
  }
}

GapGraph build_gap_graph(const CyclicMatrix& a) {
  Eigen::MatrixXi kappa = gap_adjacency(a.matrix());
  // A drop right before a_ii would need a_{i,i-1} > a_ii.
  if (kappa.diagonal().any()) throw InternalError("gap found right before a diagonal entry");
  return GapGraph(std::move(kappa));
}

std::vector<IndexSet> SccPartition::closed_components() const {
  std::vector<IndexSet> out;
  for (const auto& c : components) {
    if (c.closed) out.push_back(c.vertices);
  }
  return out;
}

std::size_t SccPartition::closed_count() const {
  return static_cast<std::size_t>(
      std::count_if(components.begin(), components.end(), [](const SccComponent& c) { return c.closed; }));
}

SccPartition scc_partition(const GapGraph& g) {
  const int n = g.n();
  constexpr int kUnvisited = -1;
  std::vector<int> index(static_cast<std::size_t>(n), kUnvisited);
  std::vector<int> lowlink(static_cast<std::size_t>(n), 0);
  std::vector<char> on_stack(static_cast<std::size_t>(n), 0);
  std::vector<int> comp_of(static_cast<std::size_t>(n), -1);
  std::vector<int> stack;
  std::vector<std::vector<int>> comps;

  struct Frame {
    int v;            // 0-based vertex
    std::size_t next;  // next out-edge to explore
  };
  std::vector<Frame> call;
  int counter = 0;

  for (int root = 0; root < n; ++root) {
    if (index[static_cast<std::size_t>(root)] != kUnvisited) continue;
    call.push_back({root, 0});
    index[static_cast<std::size_t>(root)] = lowlink[static_cast<std::size_t>(root)] = counter++;
    stack.push_back(root);
    on_stack[static_cast<std::size_t>(root)] = 1;

    while (!call.empty()) {
      Frame& f = call.back();
      const auto v = static_cast<std::size_t>(f.v);
      const auto& succ = g.out_edges(f.v + 1);
      if (f.next < succ.size()) {
        const int w = succ[f.next++] - 1;
        const auto wi = static_cast<std::size_t>(w);
        if (index[wi] == kUnvisited) {
          index[wi] = lowlink[wi] = counter++;
          stack.push_back(w);
          on_stack[wi] = 1;
          call.push_back({w, 0});
        } else if (on_stack[wi]) {
          lowlink[v] = std::min(lowlink[v], index[wi]);
        }
        continue;
      }
      if (lowlink[v] == index[v]) {
        std::vector<int> comp;
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[static_cast<std::size_t>(w)] = 0;
          comp_of[static_cast<std::size_t>(w)] = static_cast<int>(comps.size());
          comp.push_back(w + 1);
        } while (w != f.v);
        comps.push_back(std::move(comp));
      }
      const int finished = f.v;
      call.pop_back();
      if (!call.empty()) {
        const auto parent = static_cast<std::size_t>(call.back().v);
        lowlink[parent] = std::min(lowlink[parent], lowlink[static_cast<std::size_t>(finished)]);
      }
    }
  }

  std::vector<bool> closed(comps.size(), true);
  for (int v = 1; v <= n; ++v) {
    for (int w : g.out_edges(v)) {
      if (comp_of[static_cast<std::size_t>(v - 1)] != comp_of[static_cast<std::size_t>(w - 1)]) {
        closed[static_cast<std::size_t>(comp_of[static_cast<std::size_t>(v - 1)])] = false;
      }
    }
  }

  SccPartition out;
  std::vector<int> closed_vertices;
  std::vector<int> open_vertices;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    IndexSet vertices(comps[c]);
    auto& bucket = closed[c] ? closed_vertices : open_vertices;
    bucket.insert(bucket.end(), vertices.begin(), vertices.end());
    out.components.push_back({std::move(vertices), closed[c]});
  }
  std::sort(out.components.begin(), out.components.end(),
            [](const SccComponent& a, const SccComponent& b) { return a.vertices.front() < b.vertices.front(); });
  out.closed_union = IndexSet(std::move(closed_vertices));
  out.open_union = IndexSet(std::move(open_vertices));
  if (out.closed_union.empty()) throw InternalError("gap graph without a closed component");
  return out;
}

IndexSet gap_positions(const CyclicMatrix& a, int r) {
  std::vector<int> out;
  for (int k = 1; k <= a.n(); ++k) {
    if (a(r, k) > a(r, k + 1)) out.push_back(k);
  }
  return IndexSet(std::move(out));
}

ReachabilitySets reachability_sets(const CyclicMatrix& a, int r, std::optional<int> max_steps) {
  const int n = a.n();
  if (r < 1 || r > n) throw InvalidIndex("root index out of range: " + std::to_string(r));
  if (max_steps && *max_steps < 0) throw InvalidArgument("max_steps must be non-negative");

  std::vector<IndexSet> successors;  // successors[s-1] = G_{[s+1]}
  successors.reserve(static_cast<std::size_t>(n));
  for (int s = 1; s <= n; ++s) successors.push_back(gap_positions(a, wrap_index(s + 1, n)));

  ReachabilitySets out{r, {}, {}};
  const std::size_t limit =
      max_steps ? static_cast<std::size_t>(*max_steps) + 1 : std::numeric_limits<std::size_t>::max();

  IndexSet current{wrap_index(r - 1, n)};
  IndexSet cumulative = current;
  if (out.by_step.size() < limit) out.by_step.push_back(current);
  // Once a step adds nothing new to the union, no later step can.
  while (true) {
    std::vector<int> next;
    for (int s : current) {
      const auto& succ = successors[static_cast<std::size_t>(s - 1)];
      next.insert(next.end(), succ.begin(), succ.end());
    }
    current = IndexSet(std::move(next));
    const IndexSet grown = cumulative.united(current);
    if (grown.size() == cumulative.size()) break;
    cumulative = grown;
    if (out.by_step.size() < limit) out.by_step.push_back(current);
  }
  out.closure = std::move(cumulative);
  return out;
}

bool check_connected_condition(const CyclicMatrix& a) {
  std::vector<IndexSet> closures;
  for (int r = 1; r <= a.n(); ++r) closures.push_back(reachability_sets(a, r).closure);
  for (std::size_t r = 0; r < closures.size(); ++r) {
    for (std::size_t s = r + 1; s < closures.size(); ++s) {
      if (closures[r].disjoint(closures[s])) return false;
    }
  }
  return true;
}

std::string to_dot(const GapGraph& g, const SccPartition& p) {
  std::ostringstream os;
  os << "digraph gap_graph {\n";
  os << "  node [shape=circle];\n";
  for (std::size_t c = 0; c < p.components.size(); ++c) {
    const auto& comp = p.components[c];
    os << "  subgraph cluster_" << c + 1 << " {\n";
    os << "    style=" << (comp.closed ? "solid" : "dashed") << ";\n";
    os << "    label=\"" << (comp.closed ? "closed" : "open") << "\";\n";
    for (int v : comp.vertices) os << "    " << v << ";\n";
    os << "  }\n";
  }
  for (int v = 1; v <= g.n(); ++v) {
    for (int w : g.out_edges(v)) os << "  " << v << " -> " << w << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace cyclicsign
