#include "rd2/graph.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "testutil.hpp"

using namespace rd2;
namespace tu = rd2::testutil;

TEST(BuildGraph, SingleVertexNoEdges) {
  Graph g = build_graph(1, {});
  EXPECT_EQ(g.vertex_count(), 1);
  EXPECT_EQ(g.edge_count(), 0);
}

TEST(BuildGraph, Path3) {
  Graph g = build_graph(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(g.edge_count(), 2);
  EXPECT_TRUE(g.adjacent(0, 1));
  EXPECT_TRUE(g.adjacent(1, 0));
  EXPECT_FALSE(g.adjacent(0, 2));
}

TEST(BuildGraph, DuplicateEdgeRejected) {
  EXPECT_THROW(build_graph(3, {{0, 1}, {1, 0}}), ValidationError);
  EXPECT_THROW(build_graph(3, {{0, 1}, {0, 1}}), ValidationError);
}

TEST(BuildGraph, SelfLoopRejected) { EXPECT_THROW(build_graph(2, {{0, 0}}), ValidationError); }

TEST(BuildGraph, OutOfRangeRejected) {
  EXPECT_THROW(build_graph(2, {{0, 2}}), ValidationError);
  EXPECT_THROW(build_graph(2, {{-1, 0}}), ValidationError);
}

TEST(BuildGraph, AdjacencyReproducesEdgeMultisetOnce) {
  Lcg rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = tu::random_graph(2 + static_cast<int>(rng.below(10)), 40, rng);
    std::multiset<std::pair<int, int>> from_adj;
    for (int v = 0; v < g.vertex_count(); ++v) {
      auto nb = g.neighbors(v);
      EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
      for (int w : nb)
        if (v < w) from_adj.insert({v, w});
    }
    std::multiset<std::pair<int, int>> from_edges(g.edges().begin(), g.edges().end());
    EXPECT_EQ(from_adj, from_edges);
    EXPECT_EQ(static_cast<std::int64_t>(from_edges.size()), g.edge_count());
  }
}

TEST(ConnectedComponents, Examples) {
  auto one = connected_components(tu::path(3));
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0], (VertexSet{0, 1, 2}));

  auto two = connected_components(build_graph(2, {}));
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0], (VertexSet{0}));
  EXPECT_EQ(two[1], (VertexSet{1}));

  auto pairs = connected_components(build_graph(4, {{0, 1}, {2, 3}}));
  ASSERT_EQ(pairs.size(), 2u);
  EXPECT_EQ(pairs[0], (VertexSet{0, 1}));
  EXPECT_EQ(pairs[1], (VertexSet{2, 3}));
}

TEST(ConnectedComponents, IsAPartition) {
  Lcg rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(12));
    Graph g = tu::random_graph(n, 25, rng);
    auto comps = connected_components(g);
    std::vector<int> owner(n, -1);
    for (std::size_t c = 0; c < comps.size(); ++c) {
      for (int v : comps[c]) {
        EXPECT_EQ(owner[v], -1);
        owner[v] = static_cast<int>(c);
      }
    }
    for (int v = 0; v < n; ++v) EXPECT_NE(owner[v], -1);
    for (const auto& [u, v] : g.edges()) EXPECT_EQ(owner[u], owner[v]);
  }
}

TEST(IsTree, Examples) {
  EXPECT_TRUE(is_tree(tu::path(3)));
  EXPECT_FALSE(is_tree(tu::cycle(4)));
  EXPECT_FALSE(is_tree(build_graph(2, {})));
  EXPECT_TRUE(is_tree(build_graph(1, {})));
}

TEST(IsTree, ImpliesSingleComponentAndEdgeCount) {
  Lcg rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = tu::random_graph(1 + static_cast<int>(rng.below(10)), 30, rng);
    if (is_tree(g)) {
      EXPECT_EQ(connected_components(g).size(), 1u);
      EXPECT_EQ(g.edge_count(), g.vertex_count() - 1);
    }
  }
}

TEST(IsClique, Examples) {
  EXPECT_TRUE(is_clique(tu::complete(3), {0, 1, 2}));
  EXPECT_FALSE(is_clique(tu::path(3), {0, 2}));
  EXPECT_TRUE(is_clique(tu::path(3), {0}));
  EXPECT_TRUE(is_clique(tu::path(3), {}));
}

TEST(IsComplete, Examples) {
  EXPECT_TRUE(is_complete(tu::complete(5)));
  EXPECT_TRUE(is_complete(build_graph(1, {})));
  EXPECT_FALSE(is_complete(tu::path(3)));
}

TEST(InducedSubgraph, KeepsInternalEdgesOnly) {
  Graph g = build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  Graph sub = induced_subgraph(g, {0, 1, 4});
  EXPECT_EQ(sub.vertex_count(), 3);
  EXPECT_EQ(sub.edge_count(), 2);  // 0-1 and 0-4 survive as 0-1, 0-2
  EXPECT_TRUE(sub.adjacent(0, 1));
  EXPECT_TRUE(sub.adjacent(0, 2));
  EXPECT_FALSE(sub.adjacent(1, 2));
}
