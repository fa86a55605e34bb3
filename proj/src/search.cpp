#include "kcf/search.hpp"

#include "kcf/constructions.hpp"
#include "kcf/crossing.hpp"

#include <algorithm>
#include <atomic>
#include <omp.h>
#include <stdexcept>

namespace kcf {

long uniform_level_cap(int n, int level, int k, crossing_mode mode) {
  if (level <= 0 || level >= n)
    return 1;
  // Strict mode bounds level ℓ through the complement level n-ℓ.
  const int effective = mode == crossing_mode::weak ? level : std::min(level, n - level);
  return static_cast<long>(k - 1) * n / effective;
}

namespace {

struct problem {
  const family &universe;
  int k;
  graph g;
  std::vector<int> level_of;
  std::vector<vertex_set> level_members;
  std::vector<long> caps;

  problem(const family &u, int k_, crossing_mode mode)
      : universe(u), k(k_), g(build_crossing_graph(u, mode).adjacency) {
    const int n = u.n();
    const int m = static_cast<int>(u.size());
    level_members.assign(n + 1, vertex_set(m));
    for (int v = 0; v < m; ++v) {
      level_of.push_back(cardinality(u[v]));
      level_members[level_of[v]].set(v);
    }
    for (int l = 0; l <= n; ++l)
      caps.push_back(uniform_level_cap(n, l, k, mode));
  }
};

struct branch_and_bound {
  const problem &p;
  const std::atomic<long> *shared_best = nullptr;
  std::atomic<std::uint64_t> *shared_nodes = nullptr;
  std::uint64_t node_limit = 0;

  std::vector<int> chosen;
  vertex_set chosen_set;
  std::vector<long> level_used;
  std::vector<int> best;
  std::uint64_t nodes = 0;
  bool aborted = false;

  explicit branch_and_bound(const problem &pr)
      : p(pr), chosen_set(pr.g.order()), level_used(pr.caps.size(), 0) {}

  // Partition of `cand` into cliques of the crossing graph; a clique keeps at most k-1 members.
  long clique_cover_bound(const vertex_set &cand) const {
    vertex_set left = cand;
    long total = 0;
    for (int v = left.first(); v >= 0; v = left.first()) {
      left.reset(v);
      vertex_set grow = left & p.g.neighbours(v);
      long size = 1;
      for (int w = grow.first(); w >= 0; w = grow.first()) {
        left.reset(w);
        grow.reset(w);
        grow &= p.g.neighbours(w);
        ++size;
      }
      total += std::min<long>(size, p.k - 1);
    }
    return total;
  }

  long level_bound(const vertex_set &cand) const {
    long total = 0;
    for (std::size_t l = 0; l < p.caps.size(); ++l)
      total += std::min<long>(cand.count_and(p.level_members[l]), p.caps[l] - level_used[l]);
    return total;
  }

  bool limit_hit() {
    if (!node_limit)
      return false;
    if (shared_nodes) {
      if (shared_nodes->fetch_add(1, std::memory_order_relaxed) + 1 > node_limit)
        aborted = true;
    } else if (nodes > node_limit) {
      aborted = true;
    }
    return aborted;
  }

  void include(int v) {
    chosen.push_back(v);
    chosen_set.set(v);
    ++level_used[p.level_of[v]];
  }

  void undo() {
    int v = chosen.back();
    chosen.pop_back();
    chosen_set.reset(v);
    --level_used[p.level_of[v]];
  }

  // Drops candidates that would complete k pairwise crossing members together with v.
  void filter_after(int v, vertex_set &cand) const {
    vertex_set risky = cand & p.g.neighbours(v);
    if (p.k == 2) {
      cand.subtract(risky);
      return;
    }
    vertex_set common = chosen_set & p.g.neighbours(v);
    risky.for_each([&](int w) {
      if (has_clique_within(p.g, common & p.g.neighbours(w), p.k - 2))
        cand.reset(w);
    });
  }

  void run(vertex_set cand) {
    ++nodes;
    if (aborted || limit_hit())
      return;
    if (chosen.size() > best.size())
      best = chosen;
    if (cand.none())
      return;
    const long have = static_cast<long>(chosen.size());
    const long floor = static_cast<long>(best.size());
    long ub = have + level_bound(cand);
    if (ub > floor)
      ub = std::min(ub, have + clique_cover_bound(cand));
    if (ub <= floor)
      return;
    if (shared_best && ub < shared_best->load(std::memory_order_relaxed))
      return;

    const int v = cand.first();
    cand.reset(v);
    if (level_used[p.level_of[v]] < p.caps[p.level_of[v]]) {
      vertex_set next = cand;
      filter_after(v, next);
      include(v);
      run(std::move(next));
      undo();
    }
    run(std::move(cand));
  }
};

void check_inputs(const family &universe, int k) {
  if (k < 2)
    throw std::invalid_argument("k must be at least 2");
  if (universe.size() > max_search_universe)
    throw std::invalid_argument("universe of " + std::to_string(universe.size()) + " sets exceeds the limit of " +
                                std::to_string(max_search_universe));
}

search_result finish(const family &universe, int k, crossing_mode mode, std::vector<int> best, std::uint64_t nodes,
                     bool aborted, std::chrono::steady_clock::time_point start) {
  std::sort(best.begin(), best.end());
  search_result r{subfamily(universe, best), best.size(), !aborted, nodes, {}};
  if (find_pairwise_crossing_witness(r.best, k, mode))
    throw std::logic_error("search returned a family with k pairwise crossing members");
  r.elapsed = std::chrono::steady_clock::now() - start;
  return r;
}

} // namespace

search_result max_cross_free_serial(const family &universe, int k, crossing_mode mode, const search_options &opts) {
  check_inputs(universe, k);
  const auto start = std::chrono::steady_clock::now();
  problem p(universe, k, mode);
  branch_and_bound bb(p);
  bb.node_limit = opts.node_limit;
  bb.run(vertex_set::all(p.g.order()));
  return finish(universe, k, mode, bb.best, bb.nodes, bb.aborted, start);
}

search_result max_cross_free(const family &universe, int k, crossing_mode mode, const search_options &opts) {
  check_inputs(universe, k);
  const auto start = std::chrono::steady_clock::now();
  problem p(universe, k, mode);
  const int m = p.g.order();

  // Task v explores the families whose first member is v.
  std::vector<std::vector<int>> task_best(m);
  std::atomic<long> shared_best{0};
  std::atomic<std::uint64_t> shared_nodes{0};
  std::uint64_t nodes = 0;
  bool aborted = false;
  const int threads = opts.threads > 0 ? opts.threads : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads) reduction(+ : nodes) reduction(|| : aborted)
  for (int v = 0; v < m; ++v) {
    branch_and_bound bb(p);
    bb.shared_best = &shared_best;
    bb.shared_nodes = &shared_nodes;
    bb.node_limit = opts.node_limit;
    vertex_set cand = vertex_set::all(m);
    cand.clear_upto(v);
    bb.filter_after(v, cand);
    bb.include(v);
    bb.run(std::move(cand));
    nodes += bb.nodes;
    aborted = aborted || bb.aborted;
    long size = static_cast<long>(bb.best.size());
    long seen = shared_best.load();
    while (size > seen && !shared_best.compare_exchange_weak(seen, size)) {
    }
    task_best[v] = std::move(bb.best);
  }

  std::vector<int> best;
  for (int v = 0; v < m; ++v)
    if (task_best[v].size() > best.size())
      best = task_best[v];
  return finish(universe, k, mode, std::move(best), nodes + 1, aborted, start);
}

std::string to_string(universe_kind u) { return u == universe_kind::all ? "all" : "intervals"; }

universe_kind parse_universe_kind(const std::string &s) {
  if (s == "all")
    return universe_kind::all;
  if (s == "intervals")
    return universe_kind::intervals;
  throw std::invalid_argument("unknown universe '" + s + "' (expected all or intervals)");
}

family make_universe(universe_kind u, int n) {
  if (u == universe_kind::intervals)
    return gen_cyclic_intervals(n, false);
  if (n > 12)
    throw std::invalid_argument("the all-subsets universe is limited to n <= 12");
  const ground_set ground(n);
  std::vector<subset_mask> sets;
  for (subset_mask a = 0; a <= ground.full(); ++a)
    sets.push_back(a);
  return family(ground, std::move(sets));
}

int feasible_n_limit(universe_kind u) { return u == universe_kind::all ? 5 : 8; }

std::optional<std::pair<std::string, long>> known_bound(universe_kind u, crossing_mode mode, int n, int k) {
  if (u == universe_kind::all && mode == crossing_mode::weak && k == 2)
    return std::pair<std::string, long>{"2n", 2L * n};
  if (u == universe_kind::all && mode == crossing_mode::strict && k == 2)
    return std::pair<std::string, long>{"4n-2", 4L * n - 2};
  if (u == universe_kind::all && mode == crossing_mode::strict && k == 3)
    return std::pair<std::string, long>{"8n-20", 8L * n - 20};
  if (u == universe_kind::intervals && mode == crossing_mode::strict) {
    const long m = 2L * k - 1;
    return std::pair<std::string, long>{"4(k-1)n-2C(2k-1,2)", 4L * (k - 1) * n - m * (m - 1)};
  }
  return std::nullopt;
}

std::vector<bound_row> bound_table(int n_lo, int n_hi, int k_lo, int k_hi, universe_kind u, crossing_mode mode,
                                   const search_options &opts) {
  if (n_lo < 1 || n_lo > n_hi || k_lo < 2 || k_lo > k_hi)
    throw std::invalid_argument("empty or invalid table range");
  if (n_hi > feasible_n_limit(u))
    throw std::invalid_argument("n=" + std::to_string(n_hi) + " is beyond the exact-search limit n <= " +
                                std::to_string(feasible_n_limit(u)) + " for the " + to_string(u) + " universe");
  std::vector<bound_row> rows;
  for (int n = n_lo; n <= n_hi; ++n) {
    const family universe = make_universe(u, n);
    for (int k = k_lo; k <= k_hi; ++k) {
      bound_row row;
      row.n = n;
      row.k = k;
      row.universe = u;
      row.mode = mode;
      auto r = max_cross_free(universe, k, mode, opts);
      row.exact = r.size;
      row.proven_optimal = r.proven_optimal;
      if (auto b = known_bound(u, mode, n, k)) {
        row.formula_name = b->first;
        row.formula = b->second;
        if (b->first == "2n")
          row.tight = static_cast<long>(row.exact) == b->second;
        else if (u == universe_kind::intervals && n >= 2 * k)
          row.tight = static_cast<long>(row.exact) == b->second;
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

} // namespace kcf
