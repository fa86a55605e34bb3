#include "kcf/chains.hpp"

#include "kcf/family_io.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace kcf {

ordering::ordering(std::vector<int> least_first) : order_(std::move(least_first)), position_(order_.size(), -1) {
  const int n = size();
  for (int p = 0; p < n; ++p) {
    int e = order_[p];
    if (e < 0 || e >= n || position_[e] >= 0)
      throw std::invalid_argument("ordering is not a permutation of 0..n-1");
    position_[e] = p;
  }
}

ordering ordering::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return ordering(std::move(v));
}

subset_mask chain::support() const {
  subset_mask s = 0;
  for (int x : added)
    s |= bit(x);
  return s;
}

std::vector<subset_mask> chain::members() const {
  std::vector<subset_mask> out{base};
  subset_mask cur = base;
  for (int x : added) {
    cur |= bit(x);
    out.push_back(cur);
  }
  return out;
}

subset_mask chain::below(int x) const {
  subset_mask cur = base;
  for (int y : added) {
    if (y == x)
      return cur;
    cur |= bit(y);
  }
  throw std::invalid_argument("element " + std::to_string(x) + " is not in the chain support");
}

bool chain::has_member(subset_mask a) const {
  if (!is_subset(base, a) || !is_subset(a, top()))
    return false;
  // Members are exactly the prefixes of the addition sequence.
  subset_mask cur = base;
  if (cur == a)
    return true;
  for (int x : added) {
    cur |= bit(x);
    if (cur == a)
      return true;
  }
  return false;
}

chain_collection::chain_collection(ground_set ground, std::vector<chain> chains)
    : ground_(ground), chains_(std::move(chains)) {
  std::set<subset_mask> seen;
  for (std::size_t i = 0; i < chains_.size(); ++i) {
    const chain &c = chains_[i];
    if (!ground_.valid(c.base))
      throw std::invalid_argument("chain " + std::to_string(i) + " base outside the ground set");
    subset_mask acc = c.base;
    for (int x : c.added) {
      if (x < 0 || x >= ground_.size())
        throw std::invalid_argument("chain " + std::to_string(i) + " adds element outside the ground set");
      if (contains(acc, x))
        throw std::invalid_argument("chain " + std::to_string(i) + " adds element " + std::to_string(x) +
                                    " already present");
      acc |= bit(x);
    }
    for (subset_mask m : c.members())
      if (!seen.insert(m).second)
        throw std::invalid_argument("chains are not disjoint: " + brace_set(m) + " appears twice");
  }
}

std::optional<int> chain_collection::uniform_h() const {
  if (chains_.empty())
    return std::nullopt;
  int h = chains_.front().h();
  for (const auto &c : chains_)
    if (c.h() != h)
      return std::nullopt;
  return h;
}

successor_graph build_successor_graph(const family &f) {
  const int m = static_cast<int>(f.size());
  successor_graph g;
  g.order = m;
  g.out.resize(m);
  g.in.resize(m);
  g.exceptional.assign(m, false);
  for (int a = 0; a < m; ++a) {
    subset_mask missing = f.ground().complement(f[a]);
    for (int x : elements_of(missing)) {
      int b = f.index_of(f[a] | bit(x));
      if (b >= 0) {
        g.out[a].push_back(b);
        g.in[b].push_back(a);
      }
    }
  }
  for (int v = 0; v < m; ++v) {
    std::sort(g.out[v].begin(), g.out[v].end());
    std::sort(g.in[v].begin(), g.in[v].end());
    g.exceptional[v] = g.out[v].size() >= 2;
    for (int b : g.out[v])
      g.edges.emplace_back(v, b);
  }
  return g;
}

chain_collection extract_disjoint_chains(const family &f, int h) {
  if (h < 1)
    throw std::invalid_argument("chain length h must be at least 1");
  const successor_graph g = build_successor_graph(f);
  const int m = g.order;
  std::vector<char> used(m, 0);
  std::vector<int> reach(m);
  std::vector<chain> chains;

  while (true) {
    // Longest residual path from each vertex, capped at h. Edges go to
    // larger canonical indices, so a reverse sweep is a topological order.
    for (int v = m - 1; v >= 0; --v) {
      reach[v] = -1;
      if (used[v])
        continue;
      reach[v] = 0;
      for (int w : g.out[v])
        if (!used[w])
          reach[v] = std::max(reach[v], std::min(h, reach[w] + 1));
    }
    int start = -1;
    for (int v = 0; v < m && start < 0; ++v)
      if (reach[v] >= h)
        start = v;
    if (start < 0)
      break;
    std::vector<int> path{start};
    for (int left = h; left > 0; --left) {
      int cur = path.back();
      for (int w : g.out[cur])
        if (!used[w] && reach[w] >= left - 1) {
          path.push_back(w);
          break;
        }
    }
    chain c;
    c.base = f[path.front()];
    for (std::size_t t = 1; t < path.size(); ++t)
      c.added.push_back(std::countr_zero(f[path[t]] & ~f[path[t - 1]]));
    for (int v : path)
      used[v] = 1;
    chains.push_back(std::move(c));
  }
  return chain_collection(f.ground(), std::move(chains));
}

} // namespace kcf
