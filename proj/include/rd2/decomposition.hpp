#pragma once

#include <vector>

#include "rd2/graph.hpp"

namespace rd2 {

// Elimination order for a tree: every vertex except the last has exactly one
// neighbor later in the order, its father. Children always precede fathers.
struct TreeOrdering {
  std::vector<int> order;     // order[0..n-1], order.back() is the root
  std::vector<int> father;    // father[v], -1 for the root
  std::vector<int> position;  // inverse of order
};

// Deterministic: vertices sorted by (depth from root descending, index
// ascending); in a tree every edge joins consecutive depths, so the single
// later neighbor of each vertex is its BFS parent.
TreeOrdering tree_ordering(const Graph& g, int root);

enum class BlockType : int { Zero = 0, One = 1, Two = 2 };

// Type by member count vs cut-vertex count: 0 if equal, 1 if one extra
// member, 2 if at least two extra.
BlockType classify_block(int h_size, int i_size);

// Biconnected components of a connected graph, plus cut-vertex flags.
// Blocks appear in the order the depth-first traversal completes them
// (deterministic, neighbors scanned ascending), stored back to back in one
// flat array. A vertex is a cut vertex iff it lies in at least two blocks.
struct BiconnectedDecomposition {
  std::vector<std::int64_t> block_start;  // size block_count()+1
  std::vector<int> block_vertices;        // members, sorted within each block
  std::vector<char> is_cut;               // per vertex

  int block_count() const { return static_cast<int>(block_start.size()) - 1; }
  std::span<const int> members(int b) const {
    return {block_vertices.data() + block_start[b], block_vertices.data() + block_start[b + 1]};
  }
};
BiconnectedDecomposition biconnected_components(const Graph& g);

// Connected and every block induces a clique. Complete graphs qualify.
bool is_block_graph(const Graph& g);

// Bipartite tree on cut vertices and blocks: nodes 0..cut_count-1 are the
// cut vertices ascending, nodes cut_count.. are blocks in discovery order,
// with an edge whenever the cut vertex belongs to the block. Block members
// and cutsets are stored flat, one sorted run per block.
struct BlockCutTree {
  int source_n = 0;
  std::vector<int> cut_vertices;        // ascending vertex ids
  std::vector<int> cut_node_of_vertex;  // -1 if not a cut vertex
  std::vector<std::int64_t> member_start, cutset_start;
  std::vector<int> member_flat, cutset_flat;
  std::vector<BlockType> block_types;
  Graph node_graph;

  int cut_count() const { return static_cast<int>(cut_vertices.size()); }
  int block_count() const { return static_cast<int>(block_types.size()); }
  int node_count() const { return cut_count() + block_count(); }
  bool is_cut_node(int node) const { return node < cut_count(); }
  int block_of_node(int node) const { return node - cut_count(); }

  // H and I of block b, sorted ascending.
  std::span<const int> block_members(int b) const {
    return {member_flat.data() + member_start[b], member_flat.data() + member_start[b + 1]};
  }
  std::span<const int> block_cutset(int b) const {
    return {cutset_flat.data() + cutset_start[b], cutset_flat.data() + cutset_start[b + 1]};
  }
};

// Requires a connected, non-complete block graph. Throws ValidationError on
// disconnected input, UnsupportedClassError on complete graphs (callers
// special-case those) and on a block that is not a clique, naming a
// non-adjacent witness pair.
BlockCutTree block_cut_tree(const Graph& g);

}  // namespace rd2
