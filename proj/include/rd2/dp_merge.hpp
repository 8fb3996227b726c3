#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "rd2/weight.hpp"

namespace rd2 {

// One term of a min-plus merge rule: combine parent slot p with child slot c
// (slots are 1-based to match the vector layout used throughout).
struct MergeTerm {
  std::uint8_t p, c;
};

// Which term won a slot during a merge; 0/0 means the slot stayed infinite.
struct MergePick {
  std::uint8_t parent_slot = 0;
  std::uint8_t child_slot = 0;
};

// Computes every output slot from the pre-merge parent and child vectors.
// Ties go to the earliest listed term, which keeps recovered certificates
// deterministic.
template <std::size_t N>
std::array<Weight, N> merge_by_table(std::span<const std::span<const MergeTerm>> table,
                                     const std::array<Weight, N>& parent,
                                     const std::array<Weight, N>& child,
                                     std::array<MergePick, N>* picks = nullptr) {
  std::array<Weight, N> out;
  for (std::size_t s = 0; s < N; ++s) {
    Weight best = Weight::inf();
    MergePick pick;
    for (const MergeTerm& t : table[s]) {
      Weight w = parent[t.p - 1] + child[t.c - 1];
      if (w < best) {
        best = w;
        pick = {t.p, t.c};
      }
    }
    out[s] = best;
    if (picks) (*picks)[s] = pick;
  }
  return out;
}

}  // namespace rd2
