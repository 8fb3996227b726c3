#include "rd2/graph.hpp"

#include <algorithm>
#include <string>

namespace rd2 {

bool Graph::adjacent(int u, int v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

namespace detail {

Graph graph_from_sorted_edges(int n, EdgeList edges) {
  Graph g;
  g.n_ = n;
  g.m_ = static_cast<std::int64_t>(edges.size());
  g.offsets_.assign(n + 1, 0);
  for (const auto& [u, v] : edges) {
    ++g.offsets_[u + 1];
    ++g.offsets_[v + 1];
  }
  for (int v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];
  g.adj_.resize(2 * edges.size());
  std::vector<std::int64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Filling from the lexicographically sorted edge list appends each
  // adjacency list in ascending order already: vertex x first receives the
  // smaller endpoints of edges (a, x), a ascending, then the larger
  // endpoints of edges (x, b), b ascending.
  for (const auto& [u, v] : edges) {
    g.adj_[cursor[u]++] = v;
    g.adj_[cursor[v]++] = u;
  }
  g.edges_ = std::move(edges);
  return g;
}

}  // namespace detail

Graph build_graph(int n, const EdgeList& edges) {
  if (n < 0) throw ValidationError("vertex count must be nonnegative");

  EdgeList norm;
  norm.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ValidationError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") has an endpoint outside [0," + std::to_string(n) + ")");
    if (u == v) throw ValidationError("self-loop at vertex " + std::to_string(u));
    norm.emplace_back(std::min(u, v), std::max(u, v));
  }
  if (!std::is_sorted(norm.begin(), norm.end())) std::sort(norm.begin(), norm.end());
  for (std::size_t i = 1; i < norm.size(); ++i) {
    if (norm[i] == norm[i - 1])
      throw ValidationError("duplicate edge (" + std::to_string(norm[i].first) + "," +
                            std::to_string(norm[i].second) + ")");
  }
  return detail::graph_from_sorted_edges(n, std::move(norm));
}

std::vector<VertexSet> connected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<VertexSet> comps;
  std::vector<int> queue;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    VertexSet comp;
    queue.assign(1, s);
    seen[s] = 1;
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      comp.push_back(v);
      for (int w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

bool is_tree(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return false;
  return g.edge_count() == n - 1 && is_connected(g);
}

bool is_clique(const Graph& g, const VertexSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!g.adjacent(s[i], s[j])) return false;
  return true;
}

bool is_complete(const Graph& g) {
  const std::int64_t n = g.vertex_count();
  return g.edge_count() == n * (n - 1) / 2;
}

Graph induced_subgraph(const Graph& g, const VertexSet& vs) {
  std::vector<int> local(g.vertex_count(), -1);
  for (std::size_t i = 0; i < vs.size(); ++i) local[vs[i]] = static_cast<int>(i);
  EdgeList edges;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (int w : g.neighbors(vs[i])) {
      if (local[w] > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), local[w]);
    }
  }
  return build_graph(static_cast<int>(vs.size()), edges);
}

}  // namespace rd2
