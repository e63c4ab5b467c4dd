// Serial reference vs OpenMP kernels. Prints one row per workload and checks
// that both paths agree before reporting a speedup.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>

#include "spexkm/graph.hpp"
#include "spexkm/invariants.hpp"
#include "spexkm/oracle.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace spexkm;

namespace {

template <typename F>
double time_best(int reps, F&& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto start = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  return best;
}

void row(const std::string& name, double serial, double parallel, bool agree) {
  std::printf("%-34s %10.4f %10.4f %8.2fx  %s\n", name.c_str(), serial, parallel, serial / parallel,
              agree ? "ok" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::atoi(argv[1]) : 3;
  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::printf("threads: %d, best of %d\n", threads, reps);
  std::printf("%-34s %10s %10s %9s\n", "workload", "serial s", "omp s", "speedup");

  struct Search {
    int n, k, s;
    Objective objective;
  };
  for (const Search& w : {Search{7, 3, 2, Objective::Edges}, Search{8, 3, 3, Objective::Edges},
                          Search{8, 2, 3, Objective::Spectral}, Search{7, 0, 2, Objective::Spectral}}) {
    SearchReport serial, parallel;
    const double ts = time_best(reps, [&] { serial = enumerate_extremal_serial(w.n, w.k, w.s, w.objective); });
    const double tp = time_best(reps, [&] {
      parallel = w.k ? enumerate_extremal(w.n, w.k, w.s, w.objective)
                     : enumerate_matching_extremal(w.n, w.s, w.objective);
    });
    const bool agree = serial.best_value == parallel.best_value && serial.witnesses == parallel.witnesses;
    row("oracle n=" + std::to_string(w.n) + " k=" + std::to_string(w.k) + " s=" + std::to_string(w.s) + " " +
            objective_name(w.objective),
        ts, tp, agree);
  }

  std::mt19937_64 rng(5);
  std::bernoulli_distribution coin(0.15);
  for (int n : {16, 20, 22}) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng)) g.add_edge(u, v);
    TutteBergeWitness a, b;
    const double ts = time_best(reps, [&] { a = tutte_berge_min_serial(g); });
    const double tp = time_best(reps, [&] { b = tutte_berge_min(g); });
    row("tutte_berge_min n=" + std::to_string(n), ts, tp, a.barrier == b.barrier && a.value == b.value);
  }
  return 0;
}
