#include "rd2/reduction.hpp"

#include <algorithm>

namespace rd2 {

SplitInstance vc_to_r2d(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 1) throw ValidationError("reduction needs at least one source vertex");
  const auto& src_edges = g.edges();
  const int m = static_cast<int>(src_edges.size());

  EdgeList edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2 + n + 2 * m);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  for (int i = 0; i < n; ++i) edges.emplace_back(i, n + i);
  for (int j = 0; j < m; ++j) {
    edges.emplace_back(src_edges[j].first, 2 * n + j);
    edges.emplace_back(src_edges[j].second, 2 * n + j);
  }

  SplitInstance inst;
  inst.graph = build_graph(2 * n + m, edges);
  inst.source = g;
  inst.roles.assign(2 * n + m, SplitRole::Clique);
  inst.origin_vertex.assign(2 * n + m, -1);
  inst.origin_edge.assign(2 * n + m, {-1, -1});
  for (int i = 0; i < n; ++i) {
    inst.origin_vertex[i] = i;
    inst.roles[n + i] = SplitRole::Shadow;
    inst.origin_vertex[n + i] = i;
  }
  for (int j = 0; j < m; ++j) {
    inst.roles[2 * n + j] = SplitRole::EdgeVertex;
    inst.origin_edge[2 * n + j] = src_edges[j];
  }
  return inst;
}

Assignment cover_to_assignment(const SplitInstance& inst, const VertexSet& cover) {
  if (!is_vertex_cover(inst.source, cover))
    throw ValidationError("vertex set is not a cover of the source graph");
  const int n = inst.source_n();
  Assignment a(inst.graph.vertex_count(), 0);
  std::vector<char> in(n, 0);
  for (int v : cover) in[v] = 1;
  for (int i = 0; i < n; ++i) {
    if (in[i])
      a[inst.clique_vertex(i)] = 2;
    else
      a[inst.shadow_vertex(i)] = 1;
  }
  return a;
}

VertexSet assignment_to_cover(const SplitInstance& inst, const Assignment& a) {
  if (!is_r2df(inst.graph, a))
    throw ValidationError("assignment is not a valid R2DF of the split instance");
  const int n = inst.source_n();
  const int m = static_cast<int>(inst.source.edge_count());
  Assignment f = a;

  // Rewrite passes in a fixed order until nothing changes. Each rewrite
  // preserves validity and never increases the weight, so the fixpoint is a
  // canonical certificate: clique in {0,2}, shadows in {0,1}, edges all 0.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i) {  // shadow labeled 2: move the 2 inward
      if (f[inst.shadow_vertex(i)] == 2) {
        f[inst.shadow_vertex(i)] = 0;
        f[inst.clique_vertex(i)] = 2;
        changed = true;
      }
    }
    for (int j = 0; j < m; ++j) {  // edge vertex labeled 2: move to an endpoint
      if (f[inst.edge_vertex(j)] == 2) {
        f[inst.edge_vertex(j)] = 0;
        f[inst.clique_vertex(inst.origin_edge[inst.edge_vertex(j)].first)] = 2;
        changed = true;
      }
    }
    for (int j = 0; j < m; ++j) {  // edge vertex labeled 1
      if (f[inst.edge_vertex(j)] != 1) continue;
      const int u = inst.origin_edge[inst.edge_vertex(j)].first;
      if (f[inst.shadow_vertex(u)] == 0) {
        f[inst.edge_vertex(j)] = 0;  // endpoint u already carries a 2
      } else {
        f[inst.clique_vertex(u)] = 2;
        f[inst.shadow_vertex(u)] = 0;
        f[inst.edge_vertex(j)] = 0;
      }
      changed = true;
    }
    for (int i = 0; i < n; ++i) {  // clique vertex labeled 1: promote to 2
      if (f[inst.clique_vertex(i)] != 1) continue;
      f[inst.clique_vertex(i)] = 2;
      if (f[inst.shadow_vertex(i)] >= 1) f[inst.shadow_vertex(i)] = 0;
      changed = true;
    }
    for (int i = 0; i < n; ++i) {  // covered vertex needs no shadow weight
      if (f[inst.clique_vertex(i)] == 2 && f[inst.shadow_vertex(i)] != 0) {
        f[inst.shadow_vertex(i)] = 0;
        changed = true;
      }
    }
  }

  VertexSet cover;
  for (int i = 0; i < n; ++i)
    if (f[inst.clique_vertex(i)] == 2) cover.push_back(i);
  return cover;
}

}  // namespace rd2
