#include "rd2/decomposition.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "testutil.hpp"

using namespace rd2;
namespace tu = rd2::testutil;

namespace {

// Removal-based cut-vertex oracle: deleting v splits the rest.
bool removal_makes_cut(const Graph& g, int v) {
  VertexSet rest;
  for (int u = 0; u < g.vertex_count(); ++u)
    if (u != v) rest.push_back(u);
  if (rest.empty()) return false;
  return connected_components(induced_subgraph(g, rest)).size() > 1;
}

void check_ordering_contract(const Graph& g, const TreeOrdering& ord, int root) {
  const int n = g.vertex_count();
  ASSERT_EQ(static_cast<int>(ord.order.size()), n);
  EXPECT_EQ(ord.order.back(), root);
  EXPECT_EQ(ord.father[root], -1);
  for (int i = 0; i < n; ++i) EXPECT_EQ(ord.position[ord.order[i]], i);
  for (int i = 0; i + 1 < n; ++i) {
    const int v = ord.order[i];
    int later = 0;
    for (int w : g.neighbors(v))
      if (ord.position[w] > i) ++later;
    EXPECT_EQ(later, 1);  // exactly one later neighbor: the father
    ASSERT_NE(ord.father[v], -1);
    EXPECT_TRUE(g.adjacent(v, ord.father[v]));
    EXPECT_GT(ord.position[ord.father[v]], i);
  }
}

}  // namespace

TEST(TreeOrdering, Path3RootCenter) {
  auto ord = tree_ordering(tu::path(3), 1);
  EXPECT_EQ(ord.order, (std::vector<int>{0, 2, 1}));
  EXPECT_EQ(ord.father[0], 1);
  EXPECT_EQ(ord.father[2], 1);
}

TEST(TreeOrdering, SingleVertex) {
  auto ord = tree_ordering(build_graph(1, {}), 0);
  EXPECT_EQ(ord.order, (std::vector<int>{0}));
  EXPECT_EQ(ord.father[0], -1);
}

TEST(TreeOrdering, Path2) {
  auto ord = tree_ordering(tu::path(2), 1);
  EXPECT_EQ(ord.order, (std::vector<int>{0, 1}));
  EXPECT_EQ(ord.father[0], 1);
}

TEST(TreeOrdering, RejectsNonTreesAndBadRoots) {
  EXPECT_THROW(tree_ordering(tu::cycle(4), 0), ValidationError);
  EXPECT_THROW(tree_ordering(tu::path(3), 3), ValidationError);
}

TEST(TreeOrdering, ContractHoldsOnAllTreesUpTo8ForEveryRoot) {
  for (int n = 1; n <= 8; ++n) {
    tu::for_all_trees(n, [&](const Graph& g) {
      for (int root = 0; root < n; ++root)
        check_ordering_contract(g, tree_ordering(g, root), root);
    });
  }
}

TEST(ClassifyBlock, Examples) {
  EXPECT_EQ(classify_block(2, 1), BlockType::One);
  EXPECT_EQ(classify_block(3, 3), BlockType::Zero);
  EXPECT_EQ(classify_block(5, 2), BlockType::Two);
  EXPECT_THROW(classify_block(2, 3), ValidationError);
  EXPECT_THROW(classify_block(0, 0), ValidationError);
}

TEST(BlockCutTree, Path3) {
  auto t = block_cut_tree(tu::path(3));
  EXPECT_EQ(t.cut_vertices, (VertexSet{1}));
  ASSERT_EQ(t.block_count(), 2);
  std::vector<VertexSet> members;
  for (int b = 0; b < 2; ++b)
    members.emplace_back(t.block_members(b).begin(), t.block_members(b).end());
  std::sort(members.begin(), members.end());
  EXPECT_EQ(members[0], (VertexSet{0, 1}));
  EXPECT_EQ(members[1], (VertexSet{1, 2}));
  EXPECT_EQ(t.block_types[0], BlockType::One);
  EXPECT_EQ(t.block_types[1], BlockType::One);
  EXPECT_EQ(t.node_count(), 3);
  EXPECT_TRUE(is_tree(t.node_graph));
  EXPECT_EQ(t.node_graph.degree(0), 2);  // the cut node joins both blocks
}

TEST(BlockCutTree, TrianglePlusPendant) {
  Graph g = build_graph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});
  auto t = block_cut_tree(g);
  EXPECT_EQ(t.cut_vertices, (VertexSet{0}));
  ASSERT_EQ(t.block_count(), 2);
  for (int b = 0; b < 2; ++b) {
    VertexSet members(t.block_members(b).begin(), t.block_members(b).end());
    VertexSet cutset(t.block_cutset(b).begin(), t.block_cutset(b).end());
    EXPECT_EQ(cutset, (VertexSet{0}));
    if (members.size() == 3) {
      EXPECT_EQ(members, (VertexSet{0, 1, 2}));
      EXPECT_EQ(t.block_types[b], BlockType::Two);
    } else {
      EXPECT_EQ(members, (VertexSet{0, 3}));
      EXPECT_EQ(t.block_types[b], BlockType::One);
    }
  }
}

TEST(BlockCutTree, CompleteGraphRejected) {
  EXPECT_THROW(block_cut_tree(tu::complete(3)), UnsupportedClassError);
  EXPECT_THROW(block_cut_tree(build_graph(1, {})), UnsupportedClassError);
}

TEST(BlockCutTree, DisconnectedRejected) {
  EXPECT_THROW(block_cut_tree(build_graph(4, {{0, 1}, {2, 3}})), ValidationError);
}

TEST(BlockCutTree, NonBlockGraphRejectedWithWitness) {
  try {
    block_cut_tree(tu::cycle(4));
    FAIL() << "expected UnsupportedClassError";
  } catch (const UnsupportedClassError& e) {
    EXPECT_NE(std::string(e.what()).find("not adjacent"), std::string::npos);
  }
}

TEST(BlockCutTree, EveryEdgeInExactlyOneBlock) {
  Lcg rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = gen_random_block_graph(2 + static_cast<int>(rng.below(14)), 4, rng.next());
    if (is_complete(g)) continue;
    auto t = block_cut_tree(g);
    std::map<std::pair<int, int>, int> edge_blocks;
    for (int b = 0; b < t.block_count(); ++b) {
      VertexSet bm(t.block_members(b).begin(), t.block_members(b).end());
      Graph sub = induced_subgraph(g, bm);
      for (const auto& [lu, lv] : sub.edges()) ++edge_blocks[{bm[lu], bm[lv]}];
    }
    EXPECT_EQ(static_cast<std::int64_t>(edge_blocks.size()), g.edge_count());
    for (const auto& [e, cnt] : edge_blocks) EXPECT_EQ(cnt, 1);
    EXPECT_LE(t.node_count(), 2 * g.vertex_count() - 1);
    EXPECT_TRUE(is_tree(t.node_graph));
  }
}

TEST(Articulation, MatchesRemovalOracleOnAllConnectedGraphsUpTo6) {
  for (int n = 1; n <= 6; ++n) {
    tu::for_all_graphs(n, [&](const Graph& g) {
      if (!is_connected(g)) return;
      auto d = biconnected_components(g);
      for (int v = 0; v < n; ++v)
        EXPECT_EQ(static_cast<bool>(d.is_cut[v]), removal_makes_cut(g, v))
            << "n=" << n << " v=" << v;
    });
  }
}

TEST(Articulation, MatchesRemovalOracleOnRandomGraphsUpTo8) {
  Lcg rng(23);
  int done = 0;
  while (done < 300) {
    Graph g = tu::random_graph(2 + static_cast<int>(rng.below(7)), 40, rng);
    if (!is_connected(g)) continue;
    ++done;
    auto d = biconnected_components(g);
    for (int v = 0; v < g.vertex_count(); ++v)
      EXPECT_EQ(static_cast<bool>(d.is_cut[v]), removal_makes_cut(g, v));
  }
}

TEST(IsBlockGraph, Examples) {
  EXPECT_TRUE(is_block_graph(tu::path(5)));
  EXPECT_TRUE(is_block_graph(tu::complete(4)));
  EXPECT_FALSE(is_block_graph(tu::cycle(4)));
  EXPECT_FALSE(is_block_graph(build_graph(4, {{0, 1}, {2, 3}})));  // disconnected
}
