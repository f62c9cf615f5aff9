#include "cyclicsign/errors.hpp"
#include "cyclicsign/gap_graph.hpp"
#include "cyclicsign/instance_gen.hpp"

#include "support/test_support.hpp"

#include <gtest/gtest.h>

namespace cyclicsign {
namespace {

using testing::fixture_a1;
using testing::fixture_a2;
using testing::int_matrix;

IndexSet closed_union_of(const std::vector<testing::BruteComponent>& comps) {
  std::vector<int> v;
  for (const auto& c : comps) {
    if (c.closed) v.insert(v.end(), c.vertices.begin(), c.vertices.end());
  }
  return IndexSet(v);
}

TEST(GapGraph, FirstFixtureAdjacency) {
  EXPECT_EQ(build_gap_graph(fixture_a1()).kappa(),
            int_matrix({{0, 1, 0, 0, 1}, {0, 0, 0, 1, 0}, {0, 1, 0, 0, 0}, {0, 1, 1, 0, 0}, {1, 0, 0, 1, 0}}));
}

TEST(GapGraph, SecondFixtureAdjacency) {
  EXPECT_EQ(build_gap_graph(fixture_a2()).kappa(),
            int_matrix({{0, 0, 0, 1, 0}, {1, 0, 0, 1, 0}, {0, 0, 0, 0, 1}, {0, 0, 0, 0, 0}, {0, 0, 1, 0, 0}}));
}

TEST(GapGraph, ConstantRowsHaveNoEdges) {
  EXPECT_EQ(build_gap_graph(all_ones_matrix(4)).kappa(), Eigen::MatrixXi::Zero(4, 4));
}

TEST(GapGraph, OutEdgesAscending) {
  const GapGraph g = build_gap_graph(fixture_a1());
  EXPECT_EQ(g.out_edges(1), (std::vector<int>{2, 5}));
  EXPECT_EQ(g.out_edges(4), (std::vector<int>{2, 3}));
  EXPECT_TRUE(g.has_edge(5, 1));
  EXPECT_FALSE(g.has_edge(1, 3));
}

TEST(GapGraph, RejectsBadAdjacency) {
  EXPECT_THROW(GapGraph(int_matrix({{1, 0}, {0, 0}})), InvalidArgument);
  EXPECT_THROW(GapGraph(int_matrix({{0, 2}, {0, 0}})), InvalidArgument);
  EXPECT_THROW(GapGraph(Eigen::MatrixXi::Zero(2, 3)), InvalidArgument);
}

TEST(Scc, FirstFixture) {
  const SccPartition p = scc_partition(build_gap_graph(fixture_a1()));
  ASSERT_EQ(p.components.size(), 2u);
  EXPECT_EQ(p.components[0].vertices, (IndexSet{1, 5}));
  EXPECT_FALSE(p.components[0].closed);
  EXPECT_EQ(p.components[1].vertices, (IndexSet{2, 3, 4}));
  EXPECT_TRUE(p.components[1].closed);
  EXPECT_EQ(p.open_union, (IndexSet{1, 5}));
  EXPECT_EQ(p.closed_union, (IndexSet{2, 3, 4}));
  EXPECT_EQ(p.closed_count(), 1u);
}

TEST(Scc, SecondFixture) {
  const SccPartition p = scc_partition(build_gap_graph(fixture_a2()));
  ASSERT_EQ(p.components.size(), 4u);
  EXPECT_EQ(p.components[0].vertices, (IndexSet{1}));
  EXPECT_EQ(p.components[1].vertices, (IndexSet{2}));
  EXPECT_EQ(p.components[2].vertices, (IndexSet{3, 5}));
  EXPECT_EQ(p.components[3].vertices, (IndexSet{4}));
  EXPECT_FALSE(p.components[0].closed);
  EXPECT_FALSE(p.components[1].closed);
  EXPECT_TRUE(p.components[2].closed);
  EXPECT_TRUE(p.components[3].closed);
  EXPECT_EQ(p.closed_components(), (std::vector<IndexSet>{IndexSet{3, 5}, IndexSet{4}}));
}

TEST(Scc, IdentityIsOneCycle) {
  const SccPartition p = scc_partition(build_gap_graph(identity_matrix(5)));
  ASSERT_EQ(p.components.size(), 1u);
  EXPECT_EQ(p.components[0].vertices, IndexSet::range(5));
  EXPECT_TRUE(p.components[0].closed);
  EXPECT_TRUE(p.open_union.empty());
}

// Tarjan against mutual reachability from a Warshall closure, on random
// zero-diagonal patterns.
TEST(Scc, MatchesBruteForceOnRandomPatterns) {
  std::mt19937_64 engine(3);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 1 + trial % 7;
    const double p = 0.05 + 0.1 * (trial % 6);
    const GapGraph g(random_gap_pattern(n, p, engine));
    const SccPartition got = scc_partition(g);
    const auto expected = testing::brute_force_components(g.kappa());
    ASSERT_EQ(got.components.size(), expected.size());
    for (std::size_t k = 0; k < expected.size(); ++k) {
      EXPECT_EQ(got.components[k].vertices, IndexSet(expected[k].vertices));
      EXPECT_EQ(got.components[k].closed, expected[k].closed);
    }
    EXPECT_EQ(got.closed_union, closed_union_of(expected));
    EXPECT_EQ(got.closed_union.united(got.open_union), IndexSet::range(n));
    EXPECT_TRUE(got.closed_union.disjoint(got.open_union));
    EXPECT_GE(got.closed_count(), 1u);
  }
}

// Long path stresses the iterative traversal.
TEST(Scc, LongChainWithoutRecursion) {
  const int n = 3000;
  Eigen::MatrixXi k = Eigen::MatrixXi::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) k(i, i + 1) = 1;
  const SccPartition p = scc_partition(GapGraph(k));
  EXPECT_EQ(p.components.size(), static_cast<std::size_t>(n));
  EXPECT_EQ(p.closed_union, (IndexSet{n}));
}

TEST(Reachability, Identity) {
  const ReachabilitySets r = reachability_sets(identity_matrix(5), 1);
  EXPECT_EQ(r.by_step.front(), (IndexSet{5}));
  EXPECT_EQ(r.closure, IndexSet::range(5));
  EXPECT_EQ(gap_positions(identity_matrix(5), 3), (IndexSet{3}));
}

TEST(Reachability, ConstantRows) {
  const CyclicMatrix a = all_ones_matrix(3);
  const ReachabilitySets r = reachability_sets(a, 2);
  EXPECT_EQ(r.by_step.front(), (IndexSet{1}));
  for (int s = 1; s <= 3; ++s) EXPECT_TRUE(gap_positions(a, s).empty());
  EXPECT_EQ(r.closure, (IndexSet{1}));
}

TEST(Reachability, FirstFixture) {
  const ReachabilitySets r = reachability_sets(fixture_a1(), 1);
  EXPECT_EQ(r.root, 1);
  EXPECT_EQ(r.by_step[0], (IndexSet{5}));
  EXPECT_EQ(r.by_step[1], (IndexSet{1, 4}));
  for (int k : {1, 2, 3}) EXPECT_TRUE(r.closure.contains(k));
  EXPECT_EQ(r.closure, IndexSet::range(5));
}

TEST(Reachability, MaxStepsTruncatesHistoryOnly) {
  const ReachabilitySets full = reachability_sets(fixture_a1(), 1);
  const ReachabilitySets cut = reachability_sets(fixture_a1(), 1, 1);
  EXPECT_EQ(cut.by_step.size(), 2u);
  EXPECT_EQ(cut.closure, full.closure);
  EXPECT_THROW(reachability_sets(fixture_a1(), 6), InvalidIndex);
}

// k lies in G_{r,inf} iff vertex [k+1] is reachable from r by a path of
// length >= 0 (the empty path gives k = [r-1]).
TEST(Reachability, ClosureMatchesTransitiveClosure) {
  for (std::uint64_t stream = 0; stream < 400; ++stream) {
    GenConfig config;
    config.n = 1 + static_cast<int>(stream % 7);
    config.seed = 99;
    config.stream = stream;
    const CyclicMatrix a = generate(config);
    const Eigen::MatrixXi reach = testing::transitive_closure(build_gap_graph(a).kappa());
    for (int r = 1; r <= a.n(); ++r) {
      std::vector<int> expected;
      for (int k = 1; k <= a.n(); ++k) {
        if (reach(r - 1, wrap_index(k + 1, a.n()) - 1)) expected.push_back(k);
      }
      EXPECT_EQ(reachability_sets(a, r).closure, IndexSet(expected)) << testing::describe(a) << " r=" << r;
    }
  }
}

TEST(ConnectedCondition, Examples) {
  EXPECT_TRUE(check_connected_condition(identity_matrix(5)));
  EXPECT_FALSE(check_connected_condition(fixture_a2()));
  EXPECT_TRUE(check_connected_condition(fixture_a1()));
  EXPECT_EQ(reachability_sets(fixture_a2(), 4).closure, (IndexSet{3}));
  EXPECT_EQ(reachability_sets(fixture_a2(), 3).closure, (IndexSet{2, 4}));
}

TEST(Dot, ClustersCarryBorderStyle) {
  const GapGraph g = build_gap_graph(fixture_a1());
  const std::string dot = to_dot(g, scc_partition(g));
  EXPECT_EQ(dot.rfind("digraph gap_graph {", 0), 0u);
  EXPECT_NE(dot.find("style=dashed"), std::string::npos);
  EXPECT_NE(dot.find("style=solid"), std::string::npos);
  EXPECT_NE(dot.find("1 -> 2;"), std::string::npos);
  EXPECT_NE(dot.find("5 -> 4;"), std::string::npos);
  EXPECT_EQ(dot.back(), '\n');
}

}  // namespace
}  // namespace cyclicsign
