#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rd2/checkers.hpp"
#include "rd2/graph.hpp"

namespace rd2 {

enum class SplitRole : std::uint8_t { Clique, Shadow, EdgeVertex };

// Split-graph instance built from a source graph: the n source vertices form
// a clique (indices 0..n-1), each source vertex i gets a pendant shadow
// (index n+i), and each source edge j becomes a vertex (index 2n+j) adjacent
// to its two endpoints in the clique. Shadows and edge vertices together are
// independent.
struct SplitInstance {
  Graph graph;    // 2n + m vertices
  Graph source;   // the originating graph
  std::vector<SplitRole> roles;
  std::vector<int> origin_vertex;               // clique/shadow -> source vertex, else -1
  std::vector<std::pair<int, int>> origin_edge; // edge vertex -> endpoints, else (-1,-1)

  int source_n() const { return source.vertex_count(); }
  int clique_vertex(int v) const { return v; }
  int shadow_vertex(int v) const { return source_n() + v; }
  int edge_vertex(int j) const { return 2 * source_n() + j; }
};

// The construction above; |V'| = 2n+m and |E'| = n(n-1)/2 + n + 2m.
SplitInstance vc_to_r2d(const Graph& g);

// Cover certificate to label certificate: 2 on covered clique vertices,
// 1 on shadows of uncovered vertices, 0 elsewhere. Weight 2|C| + (n-|C|).
Assignment cover_to_assignment(const SplitInstance& inst, const VertexSet& cover);

// Label certificate to cover certificate: rewrites the assignment to a
// canonical form (2s pushed off shadows and edge vertices into the clique,
// 1s eliminated from edge and clique vertices), never increasing the weight,
// then reads off the clique vertices labeled 2.
VertexSet assignment_to_cover(const SplitInstance& inst, const Assignment& a);

}  // namespace rd2
