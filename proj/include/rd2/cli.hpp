#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rd2/checkers.hpp"
#include "rd2/graph.hpp"

namespace rd2::cli {

enum class Problem { GammaR2, IR2, VertexCover };
enum class Method { TreeDp, BlockDp, CompleteCase, Oracle };

const char* problem_name(Problem p);
const char* method_name(Method m);

struct ComponentReport {
  VertexSet vertices;
  std::uint64_t optimum = 0;
  Method method = Method::Oracle;
};

struct RunReport {
  Problem problem = Problem::GammaR2;
  std::uint64_t optimum = 0;
  Assignment assignment;  // gamma_r2 / i_r2
  VertexSet cover;        // vc
  std::vector<ComponentReport> components;
  double elapsed_ms = 0.0;
};

// Edge-list format: '#' starts a comment anywhere, the first significant
// line is "n m", then m lines "u v" with 0-based vertex indices below n.
// Errors carry 1-based line numbers.
Graph parse_graph(std::istream& in);
Graph parse_graph_file(const std::string& path);  // "-" reads stdin

// Exactly n whitespace-separated labels in {0,1,2}; '#' comments allowed.
Assignment parse_assignment(std::istream& in, int n);

// Whitespace-separated distinct vertex indices in [0, n).
VertexSet parse_vertex_set(std::istream& in, int n);

// Splits into components and dispatches each: single vertex and complete
// graphs are answered directly, trees go to the tree DP (i_r2), block
// graphs to the block DP (gamma_r2), anything else to the oracle when
// allowed. Optima are summed; the assignment re-validates before returning.
RunReport solve(const Graph& g, Problem problem, bool allow_oracle);

// Whole-graph exhaustive run for any of the three problems.
RunReport run_oracle(const Graph& g, Problem problem);

std::string to_json(const RunReport& r);
void print_human(std::ostream& out, const RunReport& r);

void write_edge_list(std::ostream& out, const Graph& g, const std::string& comment);

// Full command-line entry point; returns the process exit code
// (0 ok, 1 input/validation, 2 unsupported graph class, 3 size limit).
int run_main(int argc, char** argv);

}  // namespace rd2::cli
