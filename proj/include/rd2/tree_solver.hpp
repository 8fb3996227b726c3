#pragma once

#include <array>

#include "rd2/checkers.hpp"
#include "rd2/dp_merge.hpp"
#include "rd2/graph.hpp"
#include "rd2/weight.hpp"

namespace rd2 {

// Per rooted subtree, minimum weight in each of five classes (slots 1..5 at
// indices 0..4):
//   1  valid independent labeling, root labeled 2
//   2  valid, root labeled 1
//   3  valid, root labeled 0
//   4  root labeled 0 and not yet dominated, neighborhood sum 1 so far
//   5  root labeled 0 and not yet dominated, neighborhood sum 0
// Classes 4 and 5 become valid once later neighbors supply the missing
// weight; everything below the root is already valid.
using StateVector5 = std::array<Weight, 5>;

// Lone vertex: (2, 1, inf, inf, 0).
StateVector5 init_vector_tree();

// Joins a child subtree to the parent's root by an edge; pure in both
// inputs, so repeated merges of several children commute correctly.
StateVector5 merge_tree(const StateVector5& parent, const StateVector5& child);
StateVector5 merge_tree(const StateVector5& parent, const StateVector5& child,
                        std::array<MergePick, 5>& picks);

// Minimum-weight independent Roman {2}-dominating function of a tree, with
// a witness of exactly that weight. Throws ValidationError on non-trees.
Solution solve_ir2d_tree(const Graph& g);

}  // namespace rd2
