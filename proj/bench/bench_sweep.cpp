// serial vs OpenMP sweep on an n x n x n grid; rows must agree exactly
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "flamefront/sweep.hpp"

using namespace flamefront;

int main(int argc, char** argv) {
  int n = 5;
  int reps = 3;
  int jobs = 0;
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string a = argv[i];
    if (a == "--n") n = std::atoi(argv[i + 1]);
    else if (a == "--reps") reps = std::atoi(argv[i + 1]);
    else if (a == "--jobs") jobs = std::atoi(argv[i + 1]);
    else {
      std::fprintf(stderr, "usage: bench_sweep [--n N] [--reps R] [--jobs J]\n");
      return 1;
    }
  }
  if (n < 1 || reps < 1 || jobs < 0) return 1;

  GridAxes axes;
  const std::string count = std::to_string(n);
  axes.theta = parse_grid("0.1:0.9:" + count);
  axes.lambda = parse_grid("0.2:5:" + count);
  axes.alpha = parse_grid("0.1:0.9:" + count);
  const auto pts = axes.points();
  SweepConfig cfg;

  using clock = std::chrono::steady_clock;
  double best_serial = 1e300, best_parallel = 1e300;
  std::vector<SweepRecord> s, p;
  for (int r = 0; r < reps; ++r) {
    auto t0 = clock::now();
    s = run_sweep_serial(pts, cfg);
    auto t1 = clock::now();
    p = run_sweep_parallel(pts, cfg, jobs);
    auto t2 = clock::now();
    best_serial = std::min(best_serial, std::chrono::duration<double>(t1 - t0).count());
    best_parallel = std::min(best_parallel, std::chrono::duration<double>(t2 - t1).count());
  }

  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (s[i].c_star != p[i].c_star || s[i].sigma_star != p[i].sigma_star || s[i].res_ode != p[i].res_ode)
      ++mismatches;
  }
#ifdef _OPENMP
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#else
  const int threads = 1;
#endif
  std::printf("tuples,threads,serial_s,parallel_s,speedup,mismatches\n");
  std::printf("%zu,%d,%.4f,%.4f,%.2f,%zu\n", pts.size(), threads, best_serial, best_parallel,
              best_serial / best_parallel, mismatches);
  return mismatches == 0 ? 0 : 2;
}
