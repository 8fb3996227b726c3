#include "rd2/checkers.hpp"

#include <string>

namespace rd2 {

namespace {

void require_domain(std::size_t have, std::size_t want, const char* what) {
  if (have != want)
    throw ValidationError(std::string(what) + ": assignment has " + std::to_string(have) +
                          " labels, expected " + std::to_string(want));
}

void require_labels(const Assignment& a) {
  for (auto x : a)
    if (x > 2) throw ValidationError("labels must be 0, 1 or 2");
}

}  // namespace

std::uint64_t weight(const Assignment& a) {
  std::uint64_t w = 0;
  for (auto x : a) w += x;
  return w;
}

bool is_r2df(const Graph& g, const Assignment& a) {
  require_domain(a.size(), g.vertex_count(), "is_r2df");
  require_labels(a);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (a[v] != 0) continue;
    int sum = 0;
    for (int w : g.neighbors(v)) {
      sum += a[w];
      if (sum >= 2) break;
    }
    if (sum < 2) return false;
  }
  return true;
}

bool is_ir2df(const Graph& g, const Assignment& a) {
  require_domain(a.size(), g.vertex_count(), "is_ir2df");
  require_labels(a);
  for (const auto& [u, v] : g.edges())
    if (a[u] > 0 && a[v] > 0) return false;
  return is_r2df(g, a);
}

bool is_vertex_cover(const Graph& g, const VertexSet& s) {
  std::vector<char> in(g.vertex_count(), 0);
  for (int v : s) {
    if (v < 0 || v >= g.vertex_count()) throw ValidationError("cover vertex out of range");
    in[v] = 1;
  }
  for (const auto& [u, v] : g.edges())
    if (!in[u] && !in[v]) return false;
  return true;
}

bool is_induced_r2df_star(const BlockCutTree& t, const Assignment& fstar) {
  require_domain(fstar.size(), t.node_count(), "is_induced_r2df_star");
  require_labels(fstar);
  const int nc = t.cut_count();
  const Graph& tg = t.node_graph;

  for (int b = 0; b < t.block_count(); ++b) {
    const auto val = fstar[nc + b];
    if (t.block_types[b] == BlockType::One) {
      if (val > 1) return false;
    } else if (val != 0) {
      return false;
    }
  }

  // Scans a 0-valued node's candidate set for one 2 or two distinct 1s.
  std::vector<int> stamp(t.node_count(), -1);
  int stamp_id = 0;
  auto satisfied = [&](auto&& for_each_candidate) {
    ++stamp_id;
    int ones = 0;
    bool ok = false;
    for_each_candidate([&](int u) {
      if (ok || stamp[u] == stamp_id) return;
      stamp[u] = stamp_id;
      if (fstar[u] == 2) ok = true;
      if (fstar[u] == 1 && ++ones >= 2) ok = true;
    });
    return ok;
  };

  for (int c = 0; c < nc; ++c) {
    if (c + 2 < nc) tg.prefetch_adjacency(c + 2);
    if (fstar[c] != 0) continue;
    for (int h : tg.neighbors(c)) tg.prefetch_offsets(h);
    for (int h : tg.neighbors(c)) tg.prefetch_adjacency(h);
    bool ok = satisfied([&](auto&& visit) {
      visit(c);
      for (int h : tg.neighbors(c)) {
        visit(h);
        for (int u : tg.neighbors(h)) visit(u);
      }
    });
    if (!ok) return false;
  }

  for (int b = 0; b < t.block_count(); ++b) {
    if (b + 2 < t.block_count()) tg.prefetch_adjacency(nc + b + 2);
    if (t.block_types[b] == BlockType::Zero || fstar[nc + b] != 0) continue;
    bool ok = satisfied([&](auto&& visit) {
      for (int u : tg.neighbors(nc + b)) visit(u);
    });
    if (!ok) return false;
  }
  return true;
}

}  // namespace rd2
