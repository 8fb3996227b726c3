#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "rd2/errors.hpp"

namespace rd2 {

// Vertex subset of [0, n), sorted ascending, duplicate-free.
using VertexSet = std::vector<int>;

using EdgeList = std::vector<std::pair<int, int>>;

class Graph;
Graph build_graph(int n, const EdgeList& edges);
namespace detail {
Graph graph_from_sorted_edges(int n, EdgeList edges);
}

// Immutable undirected simple graph over dense vertex indices 0..n-1.
// Adjacency is stored CSR-style with each neighbor list sorted ascending,
// so iteration order is deterministic everywhere. Safe to share across
// threads after construction.
class Graph {
 public:
  Graph() = default;

  int vertex_count() const { return n_; }
  std::int64_t edge_count() const { return m_; }

  std::span<const int> neighbors(int v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  int degree(int v) const { return static_cast<int>(offsets_[v + 1] - offsets_[v]); }
  bool adjacent(int u, int v) const;

  // Hints for traversals that visit vertices in data-dependent order; issue
  // prefetch_offsets a few steps before prefetch_adjacency (which reads the
  // offset) so neither load stalls.
  void prefetch_offsets(int v) const { __builtin_prefetch(&offsets_[v]); }
  void prefetch_adjacency(int v) const { __builtin_prefetch(adj_.data() + offsets_[v]); }

  // Edges normalized to u < v, sorted lexicographically.
  const EdgeList& edges() const { return edges_; }

  friend Graph build_graph(int n, const EdgeList& edges);
  friend Graph detail::graph_from_sorted_edges(int n, EdgeList edges);

 private:
  int n_ = 0;
  std::int64_t m_ = 0;
  std::vector<std::int64_t> offsets_ = {0};
  std::vector<int> adj_;
  EdgeList edges_;
};

// Validates and builds: rejects out-of-range endpoints, self-loops and
// duplicate edges (duplicates are an error, not collapsed). The detail
// variant above is the construction bypass for internal callers whose
// edges are already normalized (u < v), sorted and duplicate-free.

// Partition of [0, n) into maximal connected sets, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

bool is_connected(const Graph& g);

// Connected with m = n - 1.
bool is_tree(const Graph& g);

// Every pair in s adjacent. Vacuously true for |s| <= 1.
bool is_clique(const Graph& g, const VertexSet& s);

// All n(n-1)/2 edges present (true for n <= 1).
bool is_complete(const Graph& g);

// Subgraph induced by vs; vertex i of the result is vs[i].
Graph induced_subgraph(const Graph& g, const VertexSet& vs);

}  // namespace rd2
