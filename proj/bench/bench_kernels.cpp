// Serial reference against the OpenMP kernels: crossing-graph construction
// and the exact branch-and-bound search.
#include "kcf/constructions.hpp"
#include "kcf/crossing.hpp"
#include "kcf/search.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <omp.h>

namespace {

double seconds(const std::function<void()> &fn, int reps) {
  auto start = std::chrono::steady_clock::now();
  for (int r = 0; r < reps; ++r)
    fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() / reps;
}

void row(const char *kernel, const char *input, double serial, double parallel, bool same) {
  std::printf("%-14s %-28s %12.6f %12.6f %8.2fx  %s\n", kernel, input, serial, parallel, serial / parallel,
              same ? "match" : "MISMATCH");
}

} // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-14s %-28s %12s %12s %9s\n", "kernel", "input", "serial [s]", "parallel [s]", "speedup");

  for (int n : {10, 11, 12}) {
    auto all = kcf::make_universe(kcf::universe_kind::all, n);
    kcf::crossing_graph a, b;
    double ts = seconds([&] { a = kcf::build_crossing_graph_serial(all, kcf::crossing_mode::strict); }, 3);
    double tp = seconds([&] { b = kcf::build_crossing_graph(all, kcf::crossing_mode::strict); }, 3);
    char label[64];
    std::snprintf(label, sizeof label, "all subsets n=%d (%zu)", n, all.size());
    row("crossing_graph", label, ts, tp, a.adjacency == b.adjacency);
  }

  struct job {
    kcf::universe_kind u;
    int n, k;
    kcf::crossing_mode mode;
  };
  for (job j : {job{kcf::universe_kind::intervals, 8, 3, kcf::crossing_mode::strict},
                job{kcf::universe_kind::intervals, 8, 2, kcf::crossing_mode::weak},
                job{kcf::universe_kind::all, 5, 3, kcf::crossing_mode::weak},
                job{kcf::universe_kind::all, 5, 4, kcf::crossing_mode::weak}}) {
    auto universe = kcf::make_universe(j.u, j.n);
    kcf::search_result a, b;
    double ts = seconds([&] { a = kcf::max_cross_free_serial(universe, j.k, j.mode); }, 1);
    double tp = seconds([&] { b = kcf::max_cross_free(universe, j.k, j.mode); }, 1);
    char label[64];
    std::snprintf(label, sizeof label, "%s n=%d k=%d %s", kcf::to_string(j.u).c_str(), j.n, j.k,
                  kcf::to_string(j.mode).c_str());
    row("max_cross_free", label, ts, tp, a.best == b.best);
  }
  return 0;
}
