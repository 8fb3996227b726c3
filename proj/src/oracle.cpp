#include "rd2/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rd2/weight.hpp"

namespace rd2 {

namespace {

void fetch_min(std::atomic<std::uint64_t>& a, std::uint64_t v) {
  std::uint64_t cur = a.load(std::memory_order_relaxed);
  while (v < cur && !a.compare_exchange_weak(cur, v, std::memory_order_relaxed)) {
  }
}

// Depth-first search over label vectors in index order, labels tried
// 0 < 1 < 2, so completions arrive in lexicographic order. Prunes a branch
// when its partial weight exceeds the best known bound (strictly — ties must
// survive so parallel blocks agree with the serial scan) and when any vertex
// can no longer reach neighborhood sum 2.
class LabelSearch {
 public:
  LabelSearch(const Graph& g, bool independent, std::atomic<std::uint64_t>* shared)
      : g_(g), n_(g.vertex_count()), independent_(independent), shared_(shared) {
    label_.assign(n_, 0);
    nbr_sum_.assign(n_, 0);
    undecided_.assign(n_, 0);
    for (int v = 0; v < n_; ++v) undecided_[v] = g.degree(v);
  }

  std::uint64_t best_weight = Weight::kInfRaw;
  Assignment best;
  std::uint64_t explored = 0;

  std::uint64_t bound() const {
    std::uint64_t b = best_weight;
    if (shared_) b = std::min(b, shared_->load(std::memory_order_relaxed));
    return b;
  }

  // v must be the lowest undecided vertex. Leaves no trace when it fails.
  bool try_assign(int v, int x) {
    if (independent_ && x > 0) {
      for (int u : g_.neighbors(v))
        if (u < v && label_[u] > 0) return false;
    }
    label_[v] = static_cast<std::uint8_t>(x);
    for (int u : g_.neighbors(v)) {
      nbr_sum_[u] += x;
      --undecided_[u];
    }
    bool ok = true;
    if (x == 0 && nbr_sum_[v] + 2 * undecided_[v] < 2) ok = false;
    if (ok) {
      for (int u : g_.neighbors(v)) {
        if (u < v && label_[u] == 0 && nbr_sum_[u] + 2 * undecided_[u] < 2) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) {
      unassign(v, x);
      return false;
    }
    return true;
  }

  void unassign(int v, int x) {
    for (int u : g_.neighbors(v)) {
      nbr_sum_[u] -= x;
      ++undecided_[u];
    }
    label_[v] = 0;
  }

  void dfs(int v, std::uint64_t w) {
    if (v == n_) {
      ++explored;
      if (w < best_weight) {
        best_weight = w;
        best = label_;
        if (shared_) fetch_min(*shared_, w);
      }
      return;
    }
    for (int x = 0; x <= 2; ++x) {
      if (w + x > bound()) break;
      if (!try_assign(v, x)) continue;
      dfs(v + 1, w + x);
      unassign(v, x);
    }
  }

 private:
  const Graph& g_;
  const int n_;
  const bool independent_;
  std::atomic<std::uint64_t>* shared_;
  Assignment label_;
  std::vector<int> nbr_sum_, undecided_;
};

void check_enum_size(const Graph& g, int limit) {
  if (g.vertex_count() > limit)
    throw SizeLimitError("instance has " + std::to_string(g.vertex_count()) +
                         " vertices, enumeration limit is " + std::to_string(limit));
}

OracleResult brute_labels_serial(const Graph& g, bool independent) {
  check_enum_size(g, kMaxEnumVertices);
  LabelSearch s(g, independent, nullptr);
  s.dfs(0, 0);
  return {s.best_weight, std::move(s.best), {}, s.explored};
}

OracleResult brute_labels(const Graph& g, bool independent) {
  check_enum_size(g, kMaxEnumVertices);
  const int n = g.vertex_count();
#ifdef _OPENMP
  const int threads = omp_get_max_threads();
#else
  const int threads = 1;
#endif
  if (threads <= 1 || n < 6) return brute_labels_serial(g, independent);

  // Fixed label prefixes become independent tasks; prefix t assigns digit
  // (t / 3^(k-1-i)) % 3 to vertex i, so task order is lexicographic order.
  int k = 0;
  std::int64_t tasks = 1;
  while (k < n - 1 && k < 9 && tasks < 4ll * threads) {
    tasks *= 3;
    ++k;
  }
  std::vector<std::int64_t> pow3(k, 1);
  for (int i = 1; i < k; ++i) pow3[i] = pow3[i - 1] * 3;

  struct TaskResult {
    std::uint64_t weight = Weight::kInfRaw;
    Assignment witness;
    std::uint64_t explored = 0;
  };
  std::vector<TaskResult> results(tasks);
  std::atomic<std::uint64_t> shared_bound{Weight::kInfRaw};

#pragma omp parallel for schedule(dynamic)
  for (std::int64_t t = 0; t < tasks; ++t) {
    LabelSearch s(g, independent, &shared_bound);
    std::uint64_t w = 0;
    bool dead = false;
    for (int i = 0; i < k; ++i) {
      const int x = static_cast<int>((t / pow3[k - 1 - i]) % 3);
      if (w + x > s.bound() || !s.try_assign(i, x)) {
        dead = true;
        break;
      }
      w += x;
    }
    if (!dead) s.dfs(k, w);
    results[t] = {s.best_weight, std::move(s.best), s.explored};
  }

  OracleResult out;
  out.optimum = Weight::kInfRaw;
  for (const auto& r : results) {
    out.explored += r.explored;
    if (r.weight < out.optimum) {
      out.optimum = r.weight;
      out.assignment = r.witness;
    }
  }
  return out;
}

}  // namespace

OracleResult brute_gamma_r2(const Graph& g) { return brute_labels(g, false); }
OracleResult brute_i_r2(const Graph& g) { return brute_labels(g, true); }
OracleResult brute_gamma_r2_serial(const Graph& g) { return brute_labels_serial(g, false); }
OracleResult brute_i_r2_serial(const Graph& g) { return brute_labels_serial(g, true); }

OracleResult brute_min_vertex_cover(const Graph& g) {
  check_enum_size(g, kMaxCoverEnumVertices);
  const int n = g.vertex_count();
  const auto& edges = g.edges();
  std::vector<std::uint32_t> edge_mask;
  edge_mask.reserve(edges.size());
  for (const auto& [u, v] : edges) edge_mask.push_back((1u << u) | (1u << v));

  OracleResult out;
  for (int k = 0; k <= n; ++k) {
    std::vector<int> comb(k);
    for (int i = 0; i < k; ++i) comb[i] = i;
    while (true) {
      ++out.explored;
      std::uint32_t mask = 0;
      for (int v : comb) mask |= 1u << v;
      bool covers = true;
      for (std::uint32_t em : edge_mask) {
        if (!(em & mask)) {
          covers = false;
          break;
        }
      }
      if (covers) {
        out.optimum = k;
        out.cover = comb;
        return out;
      }
      int i = k - 1;
      while (i >= 0 && comb[i] == n - k + i) --i;
      if (i < 0) break;
      ++comb[i];
      for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
    }
  }
  throw std::logic_error("subset enumeration exhausted without a cover");
}

Graph prufer_decode(int n, std::span<const int> code) {
  if (n < 1) throw ValidationError("tree size must be at least 1");
  if (n == 1) {
    if (!code.empty()) throw ValidationError("K_1 takes an empty code");
    return build_graph(1, {});
  }
  if (static_cast<int>(code.size()) != n - 2)
    throw ValidationError("code length must be n-2");
  for (int s : code)
    if (s < 0 || s >= n) throw ValidationError("code symbol out of range");

  std::vector<int> degree(n, 1);
  for (int s : code) ++degree[s];
  EdgeList edges;
  edges.reserve(n - 1);
  int ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int s : code) {
    edges.emplace_back(leaf, s);
    if (--degree[s] == 1 && s < ptr) {
      leaf = s;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf, n - 1);
  return build_graph(n, edges);
}

Graph gen_random_tree(int n, std::uint64_t seed) {
  if (n < 1) throw ValidationError("tree size must be at least 1");
  if (n == 1) return build_graph(1, {});
  Lcg rng(seed);
  std::vector<int> code(n - 2);
  for (int& s : code) s = static_cast<int>(rng.below(n));
  return prufer_decode(n, code);
}

Graph gen_random_block_graph(int n, int max_block, std::uint64_t seed) {
  if (n < 1) throw ValidationError("graph size must be at least 1");
  if (max_block < 2) throw ValidationError("max_block must be at least 2");
  Lcg rng(seed);
  EdgeList edges;
  int count = 1;
  while (count < n) {
    const int attach = static_cast<int>(rng.below(count));
    int size = 2 + static_cast<int>(rng.below(max_block - 1));
    size = std::min(size, n - count + 1);
    VertexSet clique;
    clique.push_back(attach);
    for (int i = 0; i < size - 1; ++i) clique.push_back(count + i);
    for (std::size_t i = 0; i < clique.size(); ++i)
      for (std::size_t j = i + 1; j < clique.size(); ++j)
        edges.emplace_back(clique[i], clique[j]);
    count += size - 1;
  }
  return build_graph(n, edges);
}

}  // namespace rd2
