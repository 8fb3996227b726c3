#include "rd2/block_solver.hpp"

#include <algorithm>
#include <stdexcept>

namespace rd2 {

namespace {

constexpr MergeTerm kCut1[] = {{1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}};
constexpr MergeTerm kCut2[] = {{2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5}};
constexpr MergeTerm kCut3[] = {{3, 1}, {3, 2}, {3, 3}, {4, 1}, {4, 2}, {5, 1}};
constexpr MergeTerm kCut4[] = {{4, 3}, {5, 2}};
constexpr MergeTerm kCut5[] = {{5, 3}};
constexpr std::span<const MergeTerm> kCutTable[] = {kCut1, kCut2, kCut3, kCut4, kCut5, {}};

constexpr MergeTerm kBlk1[] = {{1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 1},
                               {2, 2}, {3, 1}, {4, 1}, {4, 2}, {5, 1}, {6, 1}};
constexpr MergeTerm kBlk2[] = {{2, 3}, {2, 4}, {3, 2}, {5, 2}};
constexpr MergeTerm kBlk3[] = {{3, 3}};
constexpr MergeTerm kBlk4[] = {{2, 5}, {4, 3}, {4, 4}, {4, 5}, {6, 2}};
constexpr MergeTerm kBlk5[] = {{3, 4}, {5, 3}, {5, 4}};
constexpr MergeTerm kBlk6[] = {{3, 5}, {5, 5}, {6, 3}, {6, 4}, {6, 5}};
constexpr std::span<const MergeTerm> kBlockTable[] = {kBlk1, kBlk2, kBlk3, kBlk4, kBlk5, kBlk6};

std::uint8_t fstar_of_init_slot(bool cut_node, int slot) {
  if (cut_node) {
    switch (slot) {
      case 1: return 2;
      case 2: return 1;
      case 5: return 0;
    }
  } else {
    switch (slot) {
      case 2: return 1;
      case 3: return 0;
      case 6: return 0;
    }
  }
  throw std::logic_error("certificate replay reached an infeasible initial slot");
}

}  // namespace

StateVector6 init_vector_block(NodeKind kind, BlockType btype) {
  const Weight I = Weight::inf();
  if (kind == NodeKind::CutVertex) return {Weight{2}, Weight{1}, I, I, Weight{0}, I};
  switch (btype) {
    case BlockType::Zero: return {I, I, Weight{0}, I, I, I};
    case BlockType::One: return {I, Weight{1}, I, I, I, Weight{0}};
    case BlockType::Two: return {I, I, I, I, I, Weight{0}};
  }
  throw std::logic_error("unknown block type");
}

StateVector6 merge_cut_parent(const StateVector6& parent, const StateVector6& child) {
  return merge_by_table<6>(kCutTable, parent, child);
}

StateVector6 merge_cut_parent(const StateVector6& parent, const StateVector6& child,
                              std::array<MergePick, 6>& picks) {
  return merge_by_table<6>(kCutTable, parent, child, &picks);
}

StateVector6 merge_block_parent(const StateVector6& parent, const StateVector6& child) {
  return merge_by_table<6>(kBlockTable, parent, child);
}

StateVector6 merge_block_parent(const StateVector6& parent, const StateVector6& child,
                                std::array<MergePick, 6>& picks) {
  return merge_by_table<6>(kBlockTable, parent, child, &picks);
}

void merge_block_parent_in_place(StateVector6& parent, const StateVector6& child) {
  // Slot s reads `parent` as already rewritten by slots < s; the slot-4 rule
  // then sees the new slot 2 and the slot-5/6 rules the new slots 3 and 5.
  for (int s = 0; s < 6; ++s) {
    Weight best = Weight::inf();
    for (const MergeTerm& t : kBlockTable[s]) best = std::min(best, parent[t.p - 1] + child[t.c - 1]);
    parent[s] = best;
  }
}

namespace {

struct BlockDpResult {
  Weight optimum;
  Assignment fstar;  // filled only when certificates are requested
};

BlockDpResult run_block_dp(const BlockCutTree& t, bool in_place, bool want_certificate) {
  const int n = t.node_count();
  const TreeOrdering ord = tree_ordering(t.node_graph, n - 1);

  // Indexed by elimination position, as in the tree solver; position n-1 is
  // the root. Node ids below cut_count are the cut vertices. Scratch buffers
  // are reused across calls per thread.
  static thread_local std::vector<int> ppos;
  ppos.assign(n, -1);
  for (int i = 0; i + 1 < n; ++i) {
    if (i + 8 + 1 < n) __builtin_prefetch(&ord.father[ord.order[i + 8]]);
    if (i + 4 + 1 < n) __builtin_prefetch(&ord.position[ord.father[ord.order[i + 4]]]);
    ppos[i] = ord.position[ord.father[ord.order[i]]];
  }
  const auto cut_at = [&](int p) { return ord.order[p] < t.cut_count(); };
  static thread_local std::vector<StateVector6> vec;
  vec.resize(n);  // every slot is initialized below
  for (int p = 0; p < n; ++p) {
    if (p + 8 < n) {
      const int ahead = ord.order[p + 8];
      if (ahead >= t.cut_count()) __builtin_prefetch(&t.block_types[ahead - t.cut_count()]);
    }
    const int node = ord.order[p];
    vec[p] = cut_at(p)
                 ? init_vector_block(NodeKind::CutVertex)
                 : init_vector_block(NodeKind::BlockNode, t.block_types[t.block_of_node(node)]);
  }

  static thread_local std::vector<int> estart;
  estart.assign(n + 1, 0);
  if (want_certificate) {
    for (int i = 0; i + 1 < n; ++i) ++estart[ppos[i] + 1];
    for (int p = 0; p < n; ++p) estart[p + 1] += estart[p];
  }
  static thread_local std::vector<std::array<MergePick, 6>> event_picks;
  static thread_local std::vector<int> event_child;
  event_picks.resize(want_certificate && n > 1 ? n - 1 : 0);
  event_child.resize(event_picks.size());
  static thread_local std::vector<int> cursor;
  cursor.assign(estart.begin(), estart.end() - 1);

  for (int i = 0; i + 1 < n; ++i) {
    const int p = ppos[i];
    if (cut_at(p)) {
      if (want_certificate) {
        const int slot = cursor[p]++;
        vec[p] = merge_cut_parent(vec[p], vec[i], event_picks[slot]);
        event_child[slot] = i;
      } else {
        vec[p] = merge_cut_parent(vec[p], vec[i]);
      }
    } else if (in_place) {
      merge_block_parent_in_place(vec[p], vec[i]);
    } else if (want_certificate) {
      const int slot = cursor[p]++;
      vec[p] = merge_block_parent(vec[p], vec[i], event_picks[slot]);
      event_child[slot] = i;
    } else {
      vec[p] = merge_block_parent(vec[p], vec[i]);
    }
  }

  int best_slot = 1;
  for (int s = 2; s <= 3; ++s)
    if (vec[n - 1][s - 1] < vec[n - 1][best_slot - 1]) best_slot = s;

  BlockDpResult res{vec[n - 1][best_slot - 1], {}};
  if (!want_certificate) return res;
  if (!res.optimum.finite()) throw std::logic_error("block DP produced no feasible labeling");

  res.fstar.assign(n, 0);
  std::vector<std::pair<int, int>> stack;
  stack.emplace_back(n - 1, best_slot);
  while (!stack.empty()) {
    auto [p, slot] = stack.back();
    stack.pop_back();
    for (int e = estart[p + 1] - 1; e >= estart[p]; --e) {
      const MergePick pick = event_picks[e][slot - 1];
      if (pick.parent_slot == 0) throw std::logic_error("replay crossed an infeasible merge");
      stack.emplace_back(event_child[e], pick.child_slot);
      slot = pick.parent_slot;
    }
    res.fstar[ord.order[p]] = fstar_of_init_slot(cut_at(p), slot);
  }
  return res;
}

}  // namespace

Solution solve_r2d_block(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) throw ValidationError("empty graph");
  if (n == 1) return {1, Assignment{1}};
  if (is_complete(g)) {
    Assignment a(n, 0);
    a[0] = 2;
    return {2, std::move(a)};
  }
  const BlockCutTree t = block_cut_tree(g);  // rejects disconnected input
  BlockDpResult dp = run_block_dp(t, /*in_place=*/false, /*want_certificate=*/true);
  Assignment lifted = lift_assignment(t, dp.fstar);
  return {dp.optimum.value(), std::move(lifted)};
}

Weight solve_r2d_block_in_place_value(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) throw ValidationError("empty graph");
  if (n == 1) return Weight{1};
  if (is_complete(g)) return Weight{2};
  const BlockCutTree t = block_cut_tree(g);
  return run_block_dp(t, /*in_place=*/true, /*want_certificate=*/false).optimum;
}

Assignment lift_assignment(const BlockCutTree& t, const Assignment& fstar) {
  if (!is_induced_r2df_star(t, fstar))
    throw ValidationError("function on the block-cutpoint tree fails the structural conditions");
  Assignment f(t.source_n, 0);
  for (int c = 0; c < t.cut_count(); ++c) f[t.cut_vertices[c]] = fstar[c];
  for (int b = 0; b < t.block_count(); ++b) {
    if (b + 1 < t.block_count())
      for (int v : t.block_members(b + 1)) __builtin_prefetch(&t.cut_node_of_vertex[v]);
    const auto val = fstar[t.cut_count() + b];
    for (int v : t.block_members(b))
      if (t.cut_node_of_vertex[v] == -1) f[v] = val;
  }
  return f;
}

}  // namespace rd2
