// Benchmark: the OpenMP enumeration kernel against its serial reference,
// and wall time of the two linear-time DPs across instance sizes.

#include <chrono>
#include <cstdio>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rd2/block_solver.hpp"
#include "rd2/oracle.hpp"
#include "rd2/tree_solver.hpp"

using namespace rd2;

namespace {

double time_ms(const std::function<void()>& fn, int reps = 3) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

void bench_oracle(const char* name, const Graph& g, bool independent) {
  OracleResult serial, parallel;
  const double ts = time_ms([&] { serial = independent ? brute_i_r2_serial(g) : brute_gamma_r2_serial(g); });
  const double tp = time_ms([&] { parallel = independent ? brute_i_r2(g) : brute_gamma_r2(g); });
  const bool match = serial.optimum == parallel.optimum && serial.assignment == parallel.assignment;
  std::printf("%-28s %10.2f %10.2f %8.2fx   %s\n", name, ts, tp, ts / tp,
              match ? "identical" : "MISMATCH");
}

void bench_dp(const char* name, const Graph& g, bool tree) {
  std::uint64_t opt = 0;
  const double t = time_ms([&] { opt = (tree ? solve_ir2d_tree(g) : solve_r2d_block(g)).optimum; });
  std::printf("%-28s n=%-9d %12.2f ms   optimum=%llu\n", name, g.vertex_count(), t,
              static_cast<unsigned long long>(opt));
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n\n", omp_get_max_threads());
#else
  std::printf("OpenMP not enabled; parallel entry points run serially\n\n");
#endif

  std::printf("enumeration kernel (serial vs parallel, best of 3)\n");
  std::printf("%-28s %10s %10s %9s\n", "instance", "serial ms", "omp ms", "speedup");
  bench_oracle("gamma_r2 tree n=14", gen_random_tree(14, 11), false);
  bench_oracle("i_r2 tree n=14", gen_random_tree(14, 11), true);
  bench_oracle("gamma_r2 block n=14", gen_random_block_graph(14, 4, 12), false);
  bench_oracle("i_r2 block n=14", gen_random_block_graph(14, 4, 12), true);
  bench_oracle("gamma_r2 tree n=15", gen_random_tree(15, 13), false);

  std::printf("\nlinear-time DP solvers (best of 3)\n");
  for (int n : {10'000, 100'000, 1'000'000}) {
    bench_dp("tree DP (i_r2)", gen_random_tree(n, 101), true);
    bench_dp("block DP (gamma_r2)", gen_random_block_graph(n, 4, 102), false);
  }
  return 0;
}
