#pragma once

#include <cstdint>
#include <span>

#include "rd2/checkers.hpp"
#include "rd2/graph.hpp"

namespace rd2 {

// Exhaustive enumeration limits; beyond them the oracles throw
// SizeLimitError rather than truncate.
inline constexpr int kMaxEnumVertices = 15;       // 3^n label search
inline constexpr int kMaxCoverEnumVertices = 20;  // 2^n subset search

struct OracleResult {
  std::uint64_t optimum = 0;
  Assignment assignment;    // label oracles
  VertexSet cover;          // vertex-cover oracle
  std::uint64_t explored = 0;  // completed candidates; may differ across
                               // parallel runs as the shared bound tightens
};

// Minimum-weight Roman {2}-dominating / independent Roman {2}-dominating
// function by pruned 3^n search. Ties resolve to the lexicographically
// smallest label vector. The default entry points partition the label space
// across OpenMP workers; merging takes the minimum weight and then the
// earliest prefix block, so optimum and witness match the serial reference
// exactly.
OracleResult brute_gamma_r2(const Graph& g);
OracleResult brute_i_r2(const Graph& g);

// Serial references, kept for differential testing and benchmarking.
OracleResult brute_gamma_r2_serial(const Graph& g);
OracleResult brute_i_r2_serial(const Graph& g);

// Minimum vertex cover by subset enumeration, smallest size first,
// lexicographically smallest witness among minimum covers.
OracleResult brute_min_vertex_cover(const Graph& g);

// 64-bit linear congruential generator,
//   x <- 6364136223846793005 * x + 1442695040888963407  (mod 2^64),
// draws below(n) = (x >> 33) % n. Fixed here so generated instances
// reproduce bit-for-bit from a seed, in any implementation.
struct Lcg {
  std::uint64_t state;
  explicit Lcg(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return state;
  }
  std::uint64_t below(std::uint64_t n) { return (next() >> 33) % n; }
};

// Labeled tree from a Pruefer code (length n-2, symbols in [0,n)); the
// decoding is the standard bijection, so iterating all codes enumerates
// all labeled trees.
Graph prufer_decode(int n, std::span<const int> code);

// Uniform random labeled tree: n-2 Lcg draws decoded as a Pruefer code.
Graph gen_random_tree(int n, std::uint64_t seed);

// Connected block graph grown by attaching random cliques of size
// 2..max_block at a random existing vertex until n vertices exist.
Graph gen_random_block_graph(int n, int max_block, std::uint64_t seed);

}  // namespace rd2
