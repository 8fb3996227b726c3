#pragma once

#include <cstdint>
#include <vector>

#include "rd2/decomposition.hpp"
#include "rd2/graph.hpp"

namespace rd2 {

// Label per vertex, each in {0,1,2}. Domain is exactly [0, n) of the graph
// (or the node set of a block-cutpoint tree) it is checked against.
using Assignment = std::vector<std::uint8_t>;

// Optimum value together with a witness assignment of that weight.
struct Solution {
  std::uint64_t optimum = 0;
  Assignment assignment;
};

std::uint64_t weight(const Assignment& a);

// Every 0-labeled vertex has open-neighborhood label sum >= 2.
bool is_r2df(const Graph& g, const Assignment& a);

// is_r2df and no edge joins two positive labels.
bool is_ir2df(const Graph& g, const Assignment& a);

// Every edge has an endpoint in s.
bool is_vertex_cover(const Graph& g, const VertexSet& s);

// Structural conditions for a function on the block-cutpoint tree's nodes:
//   1. type-1 block nodes carry 0 or 1,
//   2. type-0 and type-2 block nodes carry 0,
//   3. a 0-valued cut node sees, within closed distance 2, a node valued 2
//      or two distinct nodes valued 1,
//   4. a 0-valued type-1/2 block node has a neighbor valued 2 or two
//      neighbors valued 1.
// Optimality is deliberately not part of this predicate.
bool is_induced_r2df_star(const BlockCutTree& t, const Assignment& fstar);

}  // namespace rd2
