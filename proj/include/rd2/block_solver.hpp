#pragma once

#include <array>

#include "rd2/checkers.hpp"
#include "rd2/decomposition.hpp"
#include "rd2/dp_merge.hpp"
#include "rd2/graph.hpp"
#include "rd2/weight.hpp"

namespace rd2 {

// Per rooted subtree of the block-cutpoint tree, minimum weight in each of
// six classes (slots 1..6 at indices 0..5).
// Cut-vertex nodes:
//   1 valid with f*(r)=2, 2 valid with f*(r)=1, 3 valid with f*(r)=0,
//   4 f*(r)=0 pending with distance-2 sum 1, 5 pending with sum 0,
//   6 unused (always infinite).
// Block nodes:
//   1 valid with closed-neighborhood sum >= 2, 2 valid with sum 1,
//   3 valid with sum 0, 4 pending with sum 1, 5 pending with sum 0,
//   6 pending and only fixable by an adjacent 2.
using StateVector6 = std::array<Weight, 6>;

enum class NodeKind { CutVertex, BlockNode };

// Cut vertex: (2,1,inf,inf,0,inf). Block of type 0: (inf,inf,0,inf,inf,inf);
// type 1: (inf,1,inf,inf,inf,0); type 2: (inf,inf,inf,inf,inf,0).
StateVector6 init_vector_block(NodeKind kind, BlockType btype = BlockType::Zero);

// Merge of a block child into a cut-vertex parent. Pure in both inputs.
StateVector6 merge_cut_parent(const StateVector6& parent, const StateVector6& child);
StateVector6 merge_cut_parent(const StateVector6& parent, const StateVector6& child,
                              std::array<MergePick, 6>& picks);

// Merge of a cut-vertex child into a block parent. All six output slots are
// computed from a snapshot of the pre-merge parent vector: the slot-4/5/6
// rules combine with the parent's *pre-merge* classes 2, 3 and 5.
StateVector6 merge_block_parent(const StateVector6& parent, const StateVector6& child);
StateVector6 merge_block_parent(const StateVector6& parent, const StateVector6& child,
                                std::array<MergePick, 6>& picks);

// Same update rules applied line by line in slot order, each line reading
// the partially overwritten vector. Kept as a probe: on some inputs this
// computes a different (wrong) optimum, which the tests pin down.
void merge_block_parent_in_place(StateVector6& parent, const StateVector6& child);

// Minimum-weight Roman {2}-dominating function of a connected block graph,
// with a witness of exactly that weight. K_1 yields (1, {1}); complete
// graphs yield (2, one vertex labeled 2) without building the tree.
Solution solve_r2d_block(const Graph& g);

// Optimum computed with the in-place merge variant; no certificate.
Weight solve_r2d_block_in_place_value(const Graph& g);

// Expands a function on the tree's nodes to the source graph: cut vertices
// keep their value, every non-cut vertex takes its block's value. Requires
// is_induced_r2df_star(t, fstar); the result has the same weight.
Assignment lift_assignment(const BlockCutTree& t, const Assignment& fstar);

}  // namespace rd2
