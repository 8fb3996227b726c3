#include "rd2/decomposition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rd2 {

TreeOrdering tree_ordering(const Graph& g, int root) {
  const int n = g.vertex_count();
  if (n < 1 || g.edge_count() != n - 1)
    throw ValidationError("tree ordering requires a tree");
  if (root < 0 || root >= n) throw ValidationError("root out of range");

  // depth and parent share a cache line per vertex.
  struct Visit {
    int depth = -1;
    int parent = -1;
  };
  std::vector<Visit> visit(n);
  std::vector<int> queue;
  queue.reserve(n);
  queue.push_back(root);
  visit[root].depth = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    // Software pipeline: pull the upcoming vertices' adjacency and state
    // toward the caches a few steps ahead; on million-vertex inputs the
    // frontier is effectively random access.
    const std::size_t qs = queue.size();
    if (head + 8 < qs) g.prefetch_offsets(queue[head + 8]);
    if (head + 4 < qs) g.prefetch_adjacency(queue[head + 4]);
    if (head + 2 < qs) {
      for (int w : g.neighbors(queue[head + 2])) __builtin_prefetch(&visit[w]);
    }
    const int v = queue[head];
    const int dv = visit[v].depth;
    for (int w : g.neighbors(v)) {
      if (visit[w].depth == -1) {
        visit[w] = {dv + 1, v};
        queue.push_back(w);
      }
    }
  }
  if (static_cast<int>(queue.size()) != n)
    throw ValidationError("tree ordering requires a tree");  // m = n-1 but disconnected

  // Counting sort: deepest level first, ascending vertex index within a level.
  int max_depth = 0;
  for (int v = 0; v < n; ++v) max_depth = std::max(max_depth, visit[v].depth);
  std::vector<int> start(max_depth + 2, 0);
  for (int v = 0; v < n; ++v) ++start[visit[v].depth];
  for (int d = max_depth - 1; d >= 0; --d) start[d] += start[d + 1];
  for (int d = 0; d <= max_depth; ++d) start[d] = (d + 1 <= max_depth ? start[d + 1] : 0);

  TreeOrdering ord;
  ord.order.resize(n);
  ord.position.assign(n, 0);
  ord.father.resize(n);
  for (int v = 0; v < n; ++v) {
    const int pos = start[visit[v].depth]++;
    ord.order[pos] = v;
    ord.position[v] = pos;
    ord.father[v] = visit[v].parent;
  }
  return ord;
}

BlockType classify_block(int h_size, int i_size) {
  if (h_size < 1 || i_size < 0 || i_size > h_size)
    throw ValidationError("block sizes must satisfy 0 <= |I| <= |H|, |H| >= 1");
  if (h_size == i_size) return BlockType::Zero;
  if (h_size == i_size + 1) return BlockType::One;
  return BlockType::Two;
}

BiconnectedDecomposition biconnected_components(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) throw ValidationError("empty graph has no block decomposition");

  BiconnectedDecomposition out;
  out.is_cut.assign(n, 0);
  out.block_start.push_back(0);
  if (n == 1) {
    out.block_vertices.push_back(0);
    out.block_start.push_back(1);
    return out;
  }
  out.block_vertices.reserve(n + n / 2);

  // Vertex-stack formulation: vertices go on a stack at discovery; when a
  // child subtree cannot reach above its parent, everything discovered from
  // that child onward plus the parent is one block. Cut vertices stay on the
  // stack and are re-listed by each of their blocks. Per-vertex state packs
  // into 24 bytes (the parent-skip flag rides on the scan index) so a visit
  // costs one cache line; the DFS parent travels on the frame stack.
  struct DfsState {
    const int* adj;  // copied in by a sequential sweep
    int deg;
    int disc;
    int low;
    int next;  // bit 31: parent edge already skipped
  };
  static constexpr int kParentSeen = 1 << 30;
  struct Frame {
    int v;
    int parent;
  };
  std::vector<DfsState> st(n);
  for (int v = 0; v < n; ++v) {
    const auto nb = g.neighbors(v);
    st[v] = {nb.data(), static_cast<int>(nb.size()), -1, 0, 0};
  }
  std::vector<int> nblocks(n, 0);
  std::vector<int> vstack;
  vstack.reserve(n);
  std::vector<Frame> frame;
  int timer = 0;

  auto pop_block = [&](int u, int v) {
    const std::size_t first = out.block_vertices.size();
    const int vdisc = st[v].disc;
    while (!vstack.empty() && st[vstack.back()].disc >= vdisc) {
      out.block_vertices.push_back(vstack.back());
      vstack.pop_back();
    }
    out.block_vertices.push_back(u);
    for (std::size_t i = first; i < out.block_vertices.size(); ++i)
      ++nblocks[out.block_vertices[i]];
    std::sort(out.block_vertices.begin() + first, out.block_vertices.end());
    out.block_start.push_back(static_cast<std::int64_t>(out.block_vertices.size()));
  };

  st[0].disc = st[0].low = timer++;
  vstack.push_back(0);
  frame.push_back({0, -1});
  while (!frame.empty()) {
    const auto [v, vparent] = frame.back();
    DfsState& sv = st[v];
    const int* nb = sv.adj;
    const int deg = sv.deg;
    bool descended = false;
    while ((sv.next & ~kParentSeen) < deg) {
      const int idx = sv.next & ~kParentSeen;
      const int w = nb[idx];
      if (idx + 1 < deg) __builtin_prefetch(&st[nb[idx + 1]]);
      if (w == vparent && !(sv.next & kParentSeen)) {
        sv.next = (idx + 1) | kParentSeen;
        continue;
      }
      sv.next = (idx + 1) | (sv.next & kParentSeen);
      DfsState& sw = st[w];
      if (sw.disc == -1) {
        sw.disc = sw.low = timer++;
        __builtin_prefetch(sw.adj);
        vstack.push_back(w);
        frame.push_back({w, v});
        descended = true;
        break;
      }
      sv.low = std::min(sv.low, sw.disc);  // back edge (or handled twin)
    }
    if (descended) continue;
    frame.pop_back();
    if (vparent != -1) {
      st[vparent].low = std::min(st[vparent].low, sv.low);
      if (sv.low >= st[vparent].disc) pop_block(vparent, v);
    }
  }
  if (timer != n) throw ValidationError("graph is disconnected");

  for (int v = 0; v < n; ++v) out.is_cut[v] = nblocks[v] >= 2;
  return out;
}

namespace {

// Blocks partition the edge set and a block on s vertices holds at most
// s(s-1)/2 of them, so the capacities sum to m exactly when every block is
// complete.
bool all_blocks_complete(const BiconnectedDecomposition& d, std::int64_t m) {
  std::int64_t capacity = 0;
  for (int b = 0; b < d.block_count(); ++b) {
    const std::int64_t s = d.block_start[b + 1] - d.block_start[b];
    capacity += s * (s - 1) / 2;
  }
  return capacity == m;
}

}  // namespace

bool is_block_graph(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return false;
  if (!is_connected(g)) return false;
  return all_blocks_complete(biconnected_components(g), g.edge_count());
}

BlockCutTree block_cut_tree(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) throw ValidationError("empty graph");
  if (is_complete(g))
    throw UnsupportedClassError("complete graph: no block-cutpoint tree, handle separately");

  auto decomp = biconnected_components(g);  // rejects disconnected input
  if (!all_blocks_complete(decomp, g.edge_count())) {
    for (int b = 0; b < decomp.block_count(); ++b) {  // error path: name a witness pair
      const auto blk = decomp.members(b);
      for (std::size_t i = 0; i < blk.size(); ++i) {
        for (std::size_t j = i + 1; j < blk.size(); ++j) {
          if (!g.adjacent(blk[i], blk[j]))
            throw UnsupportedClassError("not a block graph: vertices " + std::to_string(blk[i]) +
                                        " and " + std::to_string(blk[j]) +
                                        " share a block but are not adjacent");
        }
      }
    }
    throw std::logic_error("internal error: capacity shortfall without a witness pair");
  }

  BlockCutTree t;
  t.source_n = n;
  t.cut_node_of_vertex.assign(n, -1);
  for (int v = 0; v < n; ++v) {
    if (decomp.is_cut[v]) {
      t.cut_node_of_vertex[v] = static_cast<int>(t.cut_vertices.size());
      t.cut_vertices.push_back(v);
    }
  }
  const int nc = t.cut_count();
  const int nblocks = decomp.block_count();
  t.member_start = std::move(decomp.block_start);
  t.member_flat = std::move(decomp.block_vertices);
  t.block_types.reserve(nblocks);
  t.cutset_start.reserve(nblocks + 1);
  t.cutset_start.push_back(0);
  t.cutset_flat.reserve(nc * 2);
  std::vector<int> cut_degree(nc, 0);
  // Members are one flat sorted-run array, so this single sweep is the only
  // pass that touches cut_node_of_vertex out of order.
  for (int b = 0; b < nblocks; ++b) {
    const auto mem = t.block_members(b);
    if (b + 1 < nblocks)
      for (int v : t.block_members(b + 1)) __builtin_prefetch(&t.cut_node_of_vertex[v]);
    int csize = 0;
    for (int v : mem) {
      if (t.cut_node_of_vertex[v] != -1) {
        t.cutset_flat.push_back(v);
        ++cut_degree[t.cut_node_of_vertex[v]];
        ++csize;
      }
    }
    t.cutset_start.push_back(static_cast<std::int64_t>(t.cutset_flat.size()));
    t.block_types.push_back(classify_block(static_cast<int>(mem.size()), csize));
  }
  // Emit tree edges grouped by cut node (block ids ascending within each),
  // which is already the sorted order build_graph wants.
  std::vector<int> cut_edge_start(nc + 1, 0);
  for (int c = 0; c < nc; ++c) cut_edge_start[c + 1] = cut_edge_start[c] + cut_degree[c];
  EdgeList tree_edges(cut_edge_start[nc]);
  std::vector<int> cursor(cut_edge_start.begin(), cut_edge_start.end() - 1);
  for (int b = 0; b < nblocks; ++b) {
    if (b + 1 < nblocks)
      for (int v : t.block_cutset(b + 1)) __builtin_prefetch(&cursor[t.cut_node_of_vertex[v]]);
    for (int v : t.block_cutset(b))
      tree_edges[cursor[t.cut_node_of_vertex[v]]++] = {t.cut_node_of_vertex[v], nc + b};
  }
  // T_G of a connected graph is connected; with the edge count matching a
  // tree it is one. Downstream orderings re-verify connectivity by BFS.
  if (static_cast<std::int64_t>(tree_edges.size()) != t.node_count() - 1)
    throw std::logic_error("internal error: block-cutpoint graph is not a tree");
  t.node_graph = detail::graph_from_sorted_edges(t.node_count(), std::move(tree_edges));
  return t;
}

}  // namespace rd2
