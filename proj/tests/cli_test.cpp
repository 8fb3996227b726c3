#include "rd2/cli.hpp"

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rd2/oracle.hpp"
#include "testutil.hpp"

using namespace rd2;
using namespace rd2::cli;
namespace tu = rd2::testutil;

namespace {

Graph parse_str(const std::string& s) {
  std::istringstream in(s);
  return parse_graph(in);
}

std::string expect_parse_error(const std::string& s) {
  try {
    parse_str(s);
  } catch (const ValidationError& e) {
    return e.what();
  }
  ADD_FAILURE() << "expected ValidationError for: " << s;
  return "";
}

// Runs the real binary; returns its exit code and captures stdout.
int run_cli(const std::string& args, std::string* out = nullptr) {
  const std::string out_path = ::testing::TempDir() + "cli_stdout.txt";
  const std::string cmd = std::string(RD2SOLVE_BIN) + " " + args + " > " + out_path + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  if (out) {
    std::ifstream f(out_path);
    std::stringstream ss;
    ss << f.rdbuf();
    *out = ss.str();
  }
  return WEXITSTATUS(status);
}

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream f(path);
  f << content;
  return path;
}

}  // namespace

TEST(ParseGraph, Examples) {
  Graph p2 = parse_str("2 1\n0 1\n");
  EXPECT_EQ(p2.vertex_count(), 2);
  EXPECT_EQ(p2.edge_count(), 1);

  Graph p3 = parse_str("3 2\n0 1\n1 2\n");
  EXPECT_EQ(p3.edges(), (EdgeList{{0, 1}, {1, 2}}));

  Graph commented = parse_str("# a path\n3 2  # header\n0 1\n\n1 2 # last\n");
  EXPECT_EQ(commented.edges(), (EdgeList{{0, 1}, {1, 2}}));
}

TEST(ParseGraph, ErrorsCarryLineNumbers) {
  EXPECT_NE(expect_parse_error("2 1\n0 0\n").find("line 2: self-loop"), std::string::npos);
  EXPECT_NE(expect_parse_error("3 3\n0 1\n1 0\n").find("line 3: duplicate"), std::string::npos);
  EXPECT_NE(expect_parse_error("2 1\n0 5\n").find("line 2"), std::string::npos);
  EXPECT_NE(expect_parse_error("2\n").find("line 1"), std::string::npos);
  EXPECT_NE(expect_parse_error("2 2\n0 1\n").find("line 1"), std::string::npos);  // m too large
  EXPECT_NE(expect_parse_error("3 2\n0 1\n").find("end of input"), std::string::npos);
  EXPECT_NE(expect_parse_error("1 0\nextra\n").find("line 2"), std::string::npos);
  EXPECT_NE(expect_parse_error("").find("empty input"), std::string::npos);
}

TEST(Solve, SumsComponentOptima) {
  // P_3 plus an isolated vertex: 2 + 1
  Graph g = build_graph(4, {{0, 1}, {1, 2}});
  RunReport r = solve(g, Problem::GammaR2, false);
  EXPECT_EQ(r.optimum, 3u);
  ASSERT_EQ(r.components.size(), 2u);
  EXPECT_EQ(r.components[0].optimum, 2u);
  EXPECT_EQ(r.components[0].method, Method::BlockDp);
  EXPECT_EQ(r.components[1].optimum, 1u);
  EXPECT_EQ(r.components[1].method, Method::CompleteCase);
  EXPECT_TRUE(is_r2df(g, r.assignment));
}

TEST(Solve, TreeDpForIndependentProblem) {
  RunReport r = solve(tu::path(4), Problem::IR2, false);
  EXPECT_EQ(r.optimum, 3u);
  ASSERT_EQ(r.components.size(), 1u);
  EXPECT_EQ(r.components[0].method, Method::TreeDp);
  EXPECT_TRUE(is_ir2df(tu::path(4), r.assignment));
}

TEST(Solve, UnsupportedClassWithoutOracle) {
  EXPECT_THROW(solve(tu::cycle(4), Problem::GammaR2, false), UnsupportedClassError);
  EXPECT_THROW(solve(tu::cycle(4), Problem::IR2, false), UnsupportedClassError);
  // the triangle is complete, so igamma handles it without the oracle
  EXPECT_EQ(solve(tu::complete(3), Problem::IR2, false).optimum, 2u);
}

TEST(Solve, OracleFallback) {
  RunReport r = solve(tu::cycle(4), Problem::GammaR2, true);
  EXPECT_EQ(r.optimum, 2u);
  EXPECT_EQ(r.components[0].method, Method::Oracle);
  EXPECT_THROW(solve(tu::cycle(16), Problem::GammaR2, true), SizeLimitError);
}

TEST(Solve, MixedComponents) {
  // C_4 plus P_2: needs the oracle for the cycle only, sums to 2 + 2
  Graph g = build_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}});
  RunReport r = solve(g, Problem::GammaR2, true);
  EXPECT_EQ(r.optimum, 4u);
  EXPECT_EQ(r.components[0].method, Method::Oracle);
  EXPECT_EQ(r.components[1].method, Method::CompleteCase);
}

TEST(Json, RoundTripsAssignmentAndOptimum) {
  Graph g = build_graph(4, {{0, 1}, {1, 2}});
  RunReport r = solve(g, Problem::GammaR2, false);
  auto j = nlohmann::json::parse(to_json(r));
  EXPECT_EQ(j["problem"], "gamma_r2");
  Assignment a = j["assignment"].get<Assignment>();
  EXPECT_TRUE(is_r2df(g, a));
  EXPECT_EQ(weight(a), j["optimum"].get<std::uint64_t>());
  EXPECT_EQ(j["components"].size(), 2u);
  EXPECT_EQ(j["components"][0]["method"], "block-dp");
}

TEST(WriteEdgeList, RoundTripsThroughParse) {
  Graph g = gen_random_block_graph(20, 4, 7);
  std::ostringstream out;
  write_edge_list(out, g, "round trip");
  std::istringstream in(out.str());
  EXPECT_EQ(parse_graph(in).edges(), g.edges());
}

TEST(CliBinary, SolveHappyPath) {
  const std::string graph = write_temp("p4.txt", "4 3\n0 1\n1 2\n2 3\n");
  std::string out;
  EXPECT_EQ(run_cli("solve --problem gamma " + graph, &out), 0);
  EXPECT_NE(out.find("optimum: 3"), std::string::npos);
  EXPECT_NE(out.find("method=block-dp"), std::string::npos);

  EXPECT_EQ(run_cli("solve --problem igamma --json " + graph, &out), 0);
  auto j = nlohmann::json::parse(out);
  EXPECT_EQ(j["optimum"], 3);
  EXPECT_EQ(j["components"][0]["method"], "tree-dp");
}

TEST(CliBinary, ExitCodes) {
  const std::string selfloop = write_temp("bad.txt", "2 1\n0 0\n");
  EXPECT_EQ(run_cli("solve --problem gamma " + selfloop), 1);

  const std::string c4 = write_temp("c4.txt", "4 4\n0 1\n1 2\n2 3\n3 0\n");
  EXPECT_EQ(run_cli("solve --problem gamma " + c4), 2);
  EXPECT_EQ(run_cli("solve --problem gamma --oracle " + c4), 0);

  std::ostringstream big;
  big << "16 0\n";
  const std::string big_path = write_temp("big.txt", big.str());
  EXPECT_EQ(run_cli("oracle --problem gamma " + big_path), 3);

  EXPECT_EQ(run_cli("solve --problem gamma /nonexistent/file"), 1);
}

TEST(CliBinary, CheckSubcommand) {
  const std::string graph = write_temp("p3.txt", "3 2\n0 1\n1 2\n");
  const std::string good = write_temp("good.txt", "0 2 0\n");
  const std::string bad = write_temp("badassign.txt", "0 0 0\n");
  std::string out;
  EXPECT_EQ(run_cli("check --problem gamma --assignment " + good + " " + graph, &out), 0);
  EXPECT_NE(out.find("valid: yes"), std::string::npos);
  EXPECT_NE(out.find("weight: 2"), std::string::npos);
  EXPECT_EQ(run_cli("check --problem gamma --assignment " + bad + " " + graph, &out), 1);
  EXPECT_NE(out.find("valid: no"), std::string::npos);

  const std::string cover = write_temp("cover.txt", "1\n");
  EXPECT_EQ(run_cli("check --problem vc --assignment " + cover + " " + graph, &out), 0);
  EXPECT_NE(out.find("size: 1"), std::string::npos);
}

TEST(CliBinary, OracleSubcommand) {
  const std::string c4 = write_temp("c4b.txt", "4 4\n0 1\n1 2\n2 3\n3 0\n");
  std::string out;
  EXPECT_EQ(run_cli("oracle --problem gamma --json " + c4, &out), 0);
  auto j = nlohmann::json::parse(out);
  EXPECT_EQ(j["optimum"], 2);
  EXPECT_EQ(run_cli("oracle --problem vc --json " + c4, &out), 0);
  j = nlohmann::json::parse(out);
  EXPECT_EQ(j["optimum"], 2);
  EXPECT_EQ(j["cover"].size(), 2u);
}

TEST(CliBinary, GenIsDeterministicAndSolvable) {
  std::string a, b;
  EXPECT_EQ(run_cli("gen tree --n 30 --seed 9", &a), 0);
  EXPECT_EQ(run_cli("gen tree --n 30 --seed 9", &b), 0);
  EXPECT_EQ(a, b);
  const std::string tree = write_temp("gen.txt", a);
  std::string out;
  EXPECT_EQ(run_cli("solve --problem igamma " + tree, &out), 0);

  EXPECT_EQ(run_cli("gen block --n 25 --seed 3 --max-block 4", &a), 0);
  const std::string blockg = write_temp("genb.txt", a);
  EXPECT_EQ(run_cli("solve --problem gamma " + blockg, &out), 0);
}

TEST(CliBinary, ReduceVcEmitsParseableInstanceWithRoles) {
  const std::string p2 = write_temp("p2.txt", "2 1\n0 1\n");
  std::string out;
  EXPECT_EQ(run_cli("reduce-vc " + p2, &out), 0);
  std::istringstream in(out);
  Graph inst = parse_graph(in);  // role comments must not break the format
  EXPECT_EQ(inst.vertex_count(), 5);
  EXPECT_EQ(inst.edge_count(), 5);
  EXPECT_NE(out.find("# role 0 clique 0"), std::string::npos);
  EXPECT_NE(out.find("# role 4 edge 0 1"), std::string::npos);

  const std::string inst_path = ::testing::TempDir() + "inst.txt";
  EXPECT_EQ(run_cli("reduce-vc " + p2 + " -o " + inst_path), 0);
  std::ifstream roles(inst_path + ".roles");
  ASSERT_TRUE(roles.good());
  std::string first;
  std::getline(roles, first);
  EXPECT_EQ(first, "0 clique 0");
}
