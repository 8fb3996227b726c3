#include "rd2/tree_solver.hpp"

#include <algorithm>
#include <stdexcept>

#include "rd2/decomposition.hpp"

namespace rd2 {

namespace {

constexpr MergeTerm kSlot1[] = {{1, 3}, {1, 4}, {1, 5}};
constexpr MergeTerm kSlot2[] = {{2, 3}, {2, 4}};
constexpr MergeTerm kSlot3[] = {{3, 1}, {3, 2}, {3, 3}, {4, 1}, {4, 2}, {5, 1}};
constexpr MergeTerm kSlot4[] = {{4, 3}, {5, 2}};
constexpr MergeTerm kSlot5[] = {{5, 3}};
constexpr std::span<const MergeTerm> kTreeTable[] = {kSlot1, kSlot2, kSlot3, kSlot4, kSlot5};

std::uint8_t label_of_init_slot(int slot) {
  switch (slot) {
    case 1: return 2;
    case 2: return 1;
    case 5: return 0;
    default: throw std::logic_error("certificate replay reached an infeasible initial slot");
  }
}

}  // namespace

StateVector5 init_vector_tree() {
  return {Weight{2}, Weight{1}, Weight::inf(), Weight::inf(), Weight{0}};
}

StateVector5 merge_tree(const StateVector5& parent, const StateVector5& child) {
  return merge_by_table<5>(kTreeTable, parent, child);
}

StateVector5 merge_tree(const StateVector5& parent, const StateVector5& child,
                        std::array<MergePick, 5>& picks) {
  return merge_by_table<5>(kTreeTable, parent, child, &picks);
}

Solution solve_ir2d_tree(const Graph& g) {
  const int n = g.vertex_count();
  const TreeOrdering ord = tree_ordering(g, 0);  // rejects non-trees

  // The whole DP is indexed by elimination position, not vertex id: merges
  // then touch only two adjacent depth blocks, which keeps the working set
  // small on large instances. Position n-1 is the root. Scratch buffers are
  // reused across calls per thread; repeated solves skip the page-fault cost
  // of remapping tens of megabytes.
  static thread_local std::vector<int> ppos;
  ppos.assign(n, -1);
  for (int i = 0; i + 1 < n; ++i) {
    if (i + 8 + 1 < n) __builtin_prefetch(&ord.father[ord.order[i + 8]]);
    if (i + 4 + 1 < n) __builtin_prefetch(&ord.position[ord.father[ord.order[i + 4]]]);
    ppos[i] = ord.position[ord.father[ord.order[i]]];
  }

  static thread_local std::vector<StateVector5> vec;
  vec.assign(n, init_vector_tree());
  // One merge event per non-root position, laid out CSR-style per parent in
  // merge order: events of the node at position p live at [estart[p], estart[p+1]).
  static thread_local std::vector<int> estart;
  estart.assign(n + 1, 0);
  for (int i = 0; i + 1 < n; ++i) ++estart[ppos[i] + 1];
  for (int p = 0; p < n; ++p) estart[p + 1] += estart[p];
  static thread_local std::vector<std::array<MergePick, 5>> event_picks;
  static thread_local std::vector<int> event_child;
  event_picks.resize(n > 1 ? n - 1 : 0);  // every recorded slot is rewritten below
  event_child.resize(event_picks.size());
  static thread_local std::vector<int> cursor;
  cursor.assign(estart.begin(), estart.end() - 1);
  for (int i = 0; i + 1 < n; ++i) {
    const int p = ppos[i];
    const int slot = cursor[p]++;
    vec[p] = merge_tree(vec[p], vec[i], event_picks[slot]);
    event_child[slot] = i;
  }

  int best_slot = 1;
  for (int s = 2; s <= 3; ++s)
    if (vec[n - 1][s - 1] < vec[n - 1][best_slot - 1]) best_slot = s;
  const Weight best = vec[n - 1][best_slot - 1];
  if (!best.finite()) throw std::logic_error("tree DP produced no feasible labeling");

  // Top-down replay: unwind each position's merge events newest-first,
  // sending the recorded child slot down and continuing with the recorded
  // parent slot, until the initial slot fixes the vertex label.
  Assignment a(n, 0);
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
    a[ord.order[p]] = label_of_init_slot(slot);
  }

  return {best.value(), std::move(a)};
}

}  // namespace rd2
