#include "rd2/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <unordered_set>

#include <CLI11.hpp>
#include <json.hpp>

#include "rd2/block_solver.hpp"
#include "rd2/decomposition.hpp"
#include "rd2/oracle.hpp"
#include "rd2/reduction.hpp"
#include "rd2/tree_solver.hpp"

namespace rd2::cli {

const char* problem_name(Problem p) {
  switch (p) {
    case Problem::GammaR2: return "gamma_r2";
    case Problem::IR2: return "i_r2";
    case Problem::VertexCover: return "vc";
  }
  return "?";
}

const char* method_name(Method m) {
  switch (m) {
    case Method::TreeDp: return "tree-dp";
    case Method::BlockDp: return "block-dp";
    case Method::CompleteCase: return "complete-case";
    case Method::Oracle: return "oracle";
  }
  return "?";
}

namespace {

double ms_between(std::chrono::steady_clock::time_point a, std::chrono::steady_clock::time_point b) {
  return std::chrono::duration<double, std::milli>(b - a).count();
}

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& stripped) {
  return stripped.find_first_not_of(" \t\r\n") == std::string::npos;
}

}  // namespace

Graph parse_graph(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool have_header = false;
  long long n = 0, m = 0;
  EdgeList edges;
  std::unordered_set<std::uint64_t> seen;
  long long seen_edges = 0;

  while (std::getline(in, line)) {
    ++line_no;
    const std::string stripped = strip_comment(line);
    std::istringstream ls(stripped);
    if (!have_header) {
      long long hn, hm;
      if (!(ls >> hn)) {
        if (blank(stripped)) continue;
        throw ValidationError("line " + std::to_string(line_no) + ": expected header 'n m'");
      }
      if (!(ls >> hm))
        throw ValidationError("line " + std::to_string(line_no) + ": expected header 'n m'");
      std::string rest;
      if (ls >> rest)
        throw ValidationError("line " + std::to_string(line_no) + ": trailing tokens after 'n m'");
      if (hn < 0 || hm < 0)
        throw ValidationError("line " + std::to_string(line_no) + ": n and m must be nonnegative");
      if (hn > std::numeric_limits<int>::max())
        throw ValidationError("line " + std::to_string(line_no) + ": vertex count too large");
      if (hm > hn * (hn - 1) / 2)
        throw ValidationError("line " + std::to_string(line_no) +
                              ": m exceeds the simple-graph maximum for n");
      n = hn;
      m = hm;
      have_header = true;
      seen.reserve(static_cast<std::size_t>(m) * 2);
      edges.reserve(static_cast<std::size_t>(m));
      continue;
    }
    long long u;
    if (!(ls >> u)) {
      if (blank(stripped)) continue;
      throw ValidationError("line " + std::to_string(line_no) + ": expected 'u v'");
    }
    long long v;
    if (!(ls >> v)) throw ValidationError("line " + std::to_string(line_no) + ": expected 'u v'");
    std::string rest;
    if (ls >> rest)
      throw ValidationError("line " + std::to_string(line_no) + ": trailing tokens after 'u v'");
    if (seen_edges == m)
      throw ValidationError("line " + std::to_string(line_no) + ": more than m edges");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ValidationError("line " + std::to_string(line_no) + ": vertex index out of range");
    if (u == v) throw ValidationError("line " + std::to_string(line_no) + ": self-loop");
    const std::uint64_t key = (static_cast<std::uint64_t>(std::min(u, v)) << 32) |
                              static_cast<std::uint64_t>(std::max(u, v));
    if (!seen.insert(key).second)
      throw ValidationError("line " + std::to_string(line_no) + ": duplicate edge");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    ++seen_edges;
  }
  if (!have_header) throw ValidationError("empty input: expected header 'n m'");
  if (seen_edges != m)
    throw ValidationError("unexpected end of input: got " + std::to_string(seen_edges) +
                          " edges, header announced " + std::to_string(m));
  return build_graph(static_cast<int>(n), edges);
}

Graph parse_graph_file(const std::string& path) {
  if (path == "-") return parse_graph(std::cin);
  std::ifstream f(path);
  if (!f) throw ValidationError("cannot open '" + path + "'");
  return parse_graph(f);
}

Assignment parse_assignment(std::istream& in, int n) {
  Assignment a;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(strip_comment(line));
    long long x;
    while (ls >> x) {
      if (x < 0 || x > 2) throw ValidationError("labels must be 0, 1 or 2");
      a.push_back(static_cast<std::uint8_t>(x));
    }
    if (!ls.eof()) throw ValidationError("malformed token in assignment file");
  }
  if (static_cast<int>(a.size()) != n)
    throw ValidationError("assignment has " + std::to_string(a.size()) + " labels, graph has " +
                          std::to_string(n) + " vertices");
  return a;
}

VertexSet parse_vertex_set(std::istream& in, int n) {
  VertexSet s;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(strip_comment(line));
    long long x;
    while (ls >> x) {
      if (x < 0 || x >= n) throw ValidationError("vertex index out of range");
      s.push_back(static_cast<int>(x));
    }
    if (!ls.eof()) throw ValidationError("malformed token in vertex set file");
  }
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw ValidationError("duplicate vertex in set");
  return s;
}

RunReport solve(const Graph& g, Problem problem, bool allow_oracle) {
  if (problem == Problem::VertexCover)
    throw ValidationError("solve handles gamma_r2 and i_r2; use the oracle for vertex cover");

  const auto t0 = std::chrono::steady_clock::now();
  RunReport r;
  r.problem = problem;
  r.assignment.assign(g.vertex_count(), 0);

  for (const auto& comp : connected_components(g)) {
    const Graph sub = induced_subgraph(g, comp);
    Solution sol;
    Method method;
    if (sub.vertex_count() == 1) {
      sol = {1, Assignment{1}};
      method = Method::CompleteCase;
    } else if (is_complete(sub)) {
      Assignment a(sub.vertex_count(), 0);
      a[0] = 2;
      sol = {2, std::move(a)};
      method = Method::CompleteCase;
    } else if (problem == Problem::GammaR2 && is_block_graph(sub)) {
      sol = solve_r2d_block(sub);
      method = Method::BlockDp;
    } else if (problem == Problem::IR2 && is_tree(sub)) {
      sol = solve_ir2d_tree(sub);
      method = Method::TreeDp;
    } else if (allow_oracle) {
      OracleResult o = problem == Problem::GammaR2 ? brute_gamma_r2(sub) : brute_i_r2(sub);
      sol = {o.optimum, std::move(o.assignment)};
      method = Method::Oracle;
    } else {
      throw UnsupportedClassError(
          std::string("component containing vertex ") + std::to_string(comp.front()) +
          (problem == Problem::GammaR2 ? " is not a block graph" : " is not a tree") +
          "; rerun with --oracle for exhaustive search");
    }
    r.optimum += sol.optimum;
    for (std::size_t i = 0; i < comp.size(); ++i) r.assignment[comp[i]] = sol.assignment[i];
    r.components.push_back({comp, sol.optimum, method});
  }

  const bool valid = problem == Problem::GammaR2 ? is_r2df(g, r.assignment)
                                                 : is_ir2df(g, r.assignment);
  if (!valid || weight(r.assignment) != r.optimum)
    throw std::logic_error("internal error: emitted certificate failed re-validation");
  r.elapsed_ms = ms_between(t0, std::chrono::steady_clock::now());
  return r;
}

RunReport run_oracle(const Graph& g, Problem problem) {
  const auto t0 = std::chrono::steady_clock::now();
  RunReport r;
  r.problem = problem;
  VertexSet all(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) all[v] = v;

  if (problem == Problem::VertexCover) {
    OracleResult o = brute_min_vertex_cover(g);
    if (!is_vertex_cover(g, o.cover))
      throw std::logic_error("internal error: oracle cover failed re-validation");
    r.optimum = o.optimum;
    r.cover = std::move(o.cover);
  } else {
    OracleResult o = problem == Problem::GammaR2 ? brute_gamma_r2(g) : brute_i_r2(g);
    const bool valid = problem == Problem::GammaR2 ? is_r2df(g, o.assignment)
                                                   : is_ir2df(g, o.assignment);
    if (!valid || weight(o.assignment) != o.optimum)
      throw std::logic_error("internal error: oracle certificate failed re-validation");
    r.optimum = o.optimum;
    r.assignment = std::move(o.assignment);
  }
  r.components.push_back({std::move(all), r.optimum, Method::Oracle});
  r.elapsed_ms = ms_between(t0, std::chrono::steady_clock::now());
  return r;
}

std::string to_json(const RunReport& r) {
  nlohmann::json j;
  j["problem"] = problem_name(r.problem);
  j["optimum"] = r.optimum;
  if (r.problem == Problem::VertexCover) {
    j["cover"] = r.cover;
  } else {
    j["assignment"] = r.assignment;
  }
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : r.components) {
    comps.push_back({{"vertices", c.vertices}, {"optimum", c.optimum}, {"method", method_name(c.method)}});
  }
  j["components"] = std::move(comps);
  j["elapsed_ms"] = r.elapsed_ms;
  return j.dump();
}

void print_human(std::ostream& out, const RunReport& r) {
  out << "problem: " << problem_name(r.problem) << "\n";
  out << "optimum: " << r.optimum << "\n";
  if (r.problem == Problem::VertexCover) {
    out << "cover:";
    for (int v : r.cover) out << ' ' << v;
    out << "\n";
  } else {
    out << "assignment:";
    for (auto x : r.assignment) out << ' ' << int(x);
    out << "\n";
  }
  for (std::size_t i = 0; i < r.components.size(); ++i) {
    const auto& c = r.components[i];
    out << "component " << i << ": size=" << c.vertices.size() << " optimum=" << c.optimum
        << " method=" << method_name(c.method) << "\n";
  }
  out << "elapsed_ms: " << r.elapsed_ms << "\n";
}

void write_edge_list(std::ostream& out, const Graph& g, const std::string& comment) {
  if (!comment.empty()) out << "# " << comment << "\n";
  out << g.vertex_count() << ' ' << g.edge_count() << "\n";
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << "\n";
}

namespace {

const char* role_name(SplitRole r) {
  switch (r) {
    case SplitRole::Clique: return "clique";
    case SplitRole::Shadow: return "shadow";
    case SplitRole::EdgeVertex: return "edge";
  }
  return "?";
}

void write_roles(std::ostream& out, const SplitInstance& inst, const std::string& prefix) {
  for (int v = 0; v < inst.graph.vertex_count(); ++v) {
    out << prefix << v << ' ' << role_name(inst.roles[v]);
    if (inst.roles[v] == SplitRole::EdgeVertex)
      out << ' ' << inst.origin_edge[v].first << ' ' << inst.origin_edge[v].second;
    else
      out << ' ' << inst.origin_vertex[v];
    out << "\n";
  }
}

struct CommonOpts {
  std::string input = "-";
  bool json = false;
};

void emit(const RunReport& r, bool json) {
  if (json)
    std::cout << to_json(r) << "\n";
  else
    print_human(std::cout, r);
}

Problem parse_problem(const std::string& s, bool allow_vc) {
  if (s == "gamma") return Problem::GammaR2;
  if (s == "igamma") return Problem::IR2;
  if (allow_vc && s == "vc") return Problem::VertexCover;
  throw ValidationError("unknown problem '" + s + "'");
}

}  // namespace

int run_main(int argc, char** argv) {
  CLI::App app{"exact Roman {2}-domination solvers: i_r2 on trees, gamma_r2 on block graphs"};
  app.require_subcommand(1);

  auto* sc_solve = app.add_subcommand("solve", "solve gamma_r2 or i_r2 with the linear-time DPs");
  CommonOpts solve_opts;
  std::string solve_problem;
  bool solve_oracle = false;
  sc_solve->add_option("--problem", solve_problem, "gamma | igamma")->required();
  sc_solve->add_flag("--oracle", solve_oracle, "fall back to exhaustive search on unsupported components");
  sc_solve->add_flag("--json", solve_opts.json, "machine-readable output");
  sc_solve->add_option("input", solve_opts.input, "edge-list file, or - for stdin");

  auto* sc_check = app.add_subcommand("check", "validate a certificate against a graph");
  CommonOpts check_opts;
  std::string check_problem, check_assignment;
  sc_check->add_option("--problem", check_problem, "gamma | igamma | vc")->required();
  sc_check->add_option("--assignment", check_assignment, "certificate file")->required();
  sc_check->add_flag("--json", check_opts.json, "machine-readable output");
  sc_check->add_option("input", check_opts.input, "edge-list file, or - for stdin");

  auto* sc_oracle = app.add_subcommand("oracle", "exhaustive ground-truth search");
  CommonOpts oracle_opts;
  std::string oracle_problem;
  sc_oracle->add_option("--problem", oracle_problem, "gamma | igamma | vc")->required();
  sc_oracle->add_flag("--json", oracle_opts.json, "machine-readable output");
  sc_oracle->add_option("input", oracle_opts.input, "edge-list file, or - for stdin");

  auto* sc_reduce = app.add_subcommand("reduce-vc", "emit the split-graph instance of a vertex-cover input");
  std::string reduce_input = "-", reduce_output, reduce_roles;
  sc_reduce->add_option("-o,--output", reduce_output, "instance file (default stdout)");
  sc_reduce->add_option("--roles", reduce_roles, "role sidecar file (default <output>.roles)");
  sc_reduce->add_option("input", reduce_input, "edge-list file, or - for stdin");

  auto* sc_gen = app.add_subcommand("gen", "generate a random instance");
  std::string gen_kind, gen_output;
  long long gen_n = 0;
  unsigned long long gen_seed = 0;
  int gen_max_block = 4;
  sc_gen->add_option("kind", gen_kind, "tree | block")->required();
  sc_gen->add_option("--n", gen_n, "vertex count")->required();
  sc_gen->add_option("--seed", gen_seed, "generator seed")->required();
  sc_gen->add_option("--max-block", gen_max_block, "largest clique size (block graphs)");
  sc_gen->add_option("-o,--output", gen_output, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (sc_solve->parsed()) {
      const Graph g = parse_graph_file(solve_opts.input);
      emit(solve(g, parse_problem(solve_problem, false), solve_oracle), solve_opts.json);
      return 0;
    }
    if (sc_check->parsed()) {
      const Graph g = parse_graph_file(check_opts.input);
      const Problem problem = parse_problem(check_problem, true);
      std::ifstream af(check_assignment);
      if (!af) throw ValidationError("cannot open '" + check_assignment + "'");
      bool valid = false;
      std::uint64_t measure = 0;
      if (problem == Problem::VertexCover) {
        const VertexSet s = parse_vertex_set(af, g.vertex_count());
        valid = is_vertex_cover(g, s);
        measure = s.size();
      } else {
        const Assignment a = parse_assignment(af, g.vertex_count());
        valid = problem == Problem::GammaR2 ? is_r2df(g, a) : is_ir2df(g, a);
        measure = weight(a);
      }
      if (check_opts.json) {
        nlohmann::json j{{"problem", problem_name(problem)},
                         {"valid", valid},
                         {problem == Problem::VertexCover ? "size" : "weight", measure}};
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "problem: " << problem_name(problem) << "\n"
                  << "valid: " << (valid ? "yes" : "no") << "\n"
                  << (problem == Problem::VertexCover ? "size: " : "weight: ") << measure << "\n";
      }
      return valid ? 0 : 1;
    }
    if (sc_oracle->parsed()) {
      const Graph g = parse_graph_file(oracle_opts.input);
      emit(run_oracle(g, parse_problem(oracle_problem, true)), oracle_opts.json);
      return 0;
    }
    if (sc_reduce->parsed()) {
      const Graph g = parse_graph_file(reduce_input);
      const SplitInstance inst = vc_to_r2d(g);
      const std::string comment = "split instance: source n=" + std::to_string(g.vertex_count()) +
                                  " m=" + std::to_string(g.edge_count());
      if (reduce_output.empty()) {
        write_edge_list(std::cout, inst.graph, comment);
        if (reduce_roles.empty()) {
          write_roles(std::cout, inst, "# role ");
        } else {
          std::ofstream rf(reduce_roles);
          if (!rf) throw ValidationError("cannot open '" + reduce_roles + "'");
          write_roles(rf, inst, "");
        }
      } else {
        std::ofstream of(reduce_output);
        if (!of) throw ValidationError("cannot open '" + reduce_output + "'");
        write_edge_list(of, inst.graph, comment);
        const std::string roles_path = reduce_roles.empty() ? reduce_output + ".roles" : reduce_roles;
        std::ofstream rf(roles_path);
        if (!rf) throw ValidationError("cannot open '" + roles_path + "'");
        write_roles(rf, inst, "");
      }
      return 0;
    }
    if (sc_gen->parsed()) {
      Graph g;
      if (gen_kind == "tree")
        g = gen_random_tree(static_cast<int>(gen_n), gen_seed);
      else if (gen_kind == "block")
        g = gen_random_block_graph(static_cast<int>(gen_n), gen_max_block, gen_seed);
      else
        throw ValidationError("unknown kind '" + gen_kind + "' (expected tree or block)");
      const std::string comment = gen_kind + " n=" + std::to_string(gen_n) +
                                  " seed=" + std::to_string(gen_seed) +
                                  (gen_kind == "block" ? " max_block=" + std::to_string(gen_max_block) : "");
      if (gen_output.empty()) {
        write_edge_list(std::cout, g, comment);
      } else {
        std::ofstream of(gen_output);
        if (!of) throw ValidationError("cannot open '" + gen_output + "'");
        write_edge_list(of, g, comment);
      }
      return 0;
    }
  } catch (const UnsupportedClassError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const SizeLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace rd2::cli
