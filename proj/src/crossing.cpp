#include "kcf/crossing.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace kcf {

crossing_graph build_crossing_graph_serial(const family &f, crossing_mode mode) {
  const int m = static_cast<int>(f.size());
  crossing_graph cg{mode, graph(m)};
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (crosses(f[i], f[j], f.ground(), mode))
        cg.adjacency.add_edge(i, j);
  return cg;
}

crossing_graph build_crossing_graph(const family &f, crossing_mode mode) {
  const int m = static_cast<int>(f.size());
  crossing_graph cg{mode, graph(m)};
  const auto sets = f.sets();
  const ground_set ground = f.ground();
  // Each thread owns whole rows, so both (i,j) and (j,i) are written independently.
#pragma omp parallel for schedule(dynamic, 16)
  for (int i = 0; i < m; ++i) {
    vertex_set &row = cg.adjacency.row(i);
    for (int j = 0; j < m; ++j)
      if (j != i && crosses(sets[i], sets[j], ground, mode))
        row.set(j);
  }
  return cg;
}

witness::witness(const family &f, std::vector<int> indices, crossing_mode mode)
    : indices_(std::move(indices)), mode_(mode) {
  for (int i : indices_)
    sets_.push_back(f[static_cast<std::size_t>(i)]);
  for (std::size_t a = 0; a < sets_.size(); ++a)
    for (std::size_t b = a + 1; b < sets_.size(); ++b)
      if (!crosses(sets_[a], sets_[b], f.ground(), mode))
        throw std::logic_error("witness members do not pairwise cross");
}

namespace {

struct clique_search {
  const graph &g;
  int k;
  std::vector<int> clique;

  bool extend(const vertex_set &cand) {
    const int need = k - static_cast<int>(clique.size());
    if (need == 0)
      return true;
    int remaining = cand.count();
    if (remaining < need)
      return false;
    if (greedy_colour_count(g, cand, need) < need)
      return false;
    for (int v = cand.first(); v >= 0 && remaining >= need; v = cand.next(v), --remaining) {
      clique.push_back(v);
      vertex_set next = cand & g.neighbours(v);
      next.clear_upto(v);
      if (extend(next))
        return true;
      clique.pop_back();
    }
    return false;
  }
};

// Vertices of the (k-1)-core; every k-clique lives there.
vertex_set clique_core(const graph &g, int k) {
  const int n = g.order();
  vertex_set alive = vertex_set::all(n);
  std::vector<int> deg(n);
  std::vector<int> stack;
  for (int v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] < k - 1) {
      alive.reset(v);
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    g.neighbours(v).for_each([&](int u) {
      if (alive.test(u) && --deg[u] < k - 1) {
        alive.reset(u);
        stack.push_back(u);
      }
    });
  }
  return alive;
}

} // namespace

std::optional<std::vector<int>> find_k_clique(const graph &g, int k) {
  if (k < 1)
    throw std::invalid_argument("clique size must be positive");
  if (g.order() == 0)
    return std::nullopt;
  if (k == 1)
    return std::vector<int>{0};
  vertex_set alive = clique_core(g, k);
  clique_search search{g, k, {}};
  for (int v = alive.first(); v >= 0; v = alive.next(v)) {
    search.clique.assign(1, v);
    vertex_set cand = alive & g.neighbours(v);
    cand.clear_upto(v);
    if (search.extend(cand))
      return search.clique;
  }
  return std::nullopt;
}

bool has_clique_within(const graph &g, const vertex_set &within, int size) {
  if (size <= 0)
    return true;
  clique_search search{g, size, {}};
  return search.extend(within);
}

std::optional<witness> find_pairwise_crossing_witness(const family &f, int k, crossing_mode mode) {
  if (k < 2)
    throw std::invalid_argument("witness size k must be at least 2");
  auto cg = build_crossing_graph(f, mode);
  auto clique = find_k_clique(cg.adjacency, k);
  if (!clique)
    return std::nullopt;
  return witness(f, std::move(*clique), mode);
}

std::vector<int> greedy_independent_set(const graph &g) {
  const int n = g.order();
  vertex_set alive = vertex_set::all(n);
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v)
    deg[v] = g.degree(v);
  std::vector<int> chosen;
  while (alive.any()) {
    int best = -1;
    alive.for_each([&](int v) {
      if (best < 0 || deg[v] < deg[best])
        best = v;
    });
    chosen.push_back(best);
    vertex_set removed = alive & g.neighbours(best);
    removed.set(best);
    alive.subtract(removed);
    removed.for_each([&](int r) { (alive & g.neighbours(r)).for_each([&](int u) { --deg[u]; }); });
  }
  std::sort(chosen.begin(), chosen.end());
  if (!is_independent(g, chosen))
    throw std::logic_error("greedy independent set is not independent");
  return chosen;
}

uniform_report uniform_bound_report(const family &f, int k) {
  uniform_report r;
  r.size = f.size();
  if (f.empty())
    return r;
  int level = cardinality(f[0]);
  for (subset_mask a : f)
    if (cardinality(a) != level)
      return r;
  r.is_uniform = true;
  r.level = level;
  if (level == 0)
    return r;
  long num = static_cast<long>(k - 1) * f.n();
  long den = level;
  long g = std::gcd(num, den);
  if (g > 0) {
    num /= g;
    den /= g;
  }
  r.bound = rational{num, den};
  r.violates = static_cast<long>(r.size) * level > static_cast<long>(k - 1) * f.n();
  return r;
}

} // namespace kcf
