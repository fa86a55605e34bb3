#pragma once

// Brute-force reference computations, independent of the library's search code.

#include "kcf/family.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace kcf::testing {

inline std::vector<std::uint32_t> small_adjacency(const family &f, crossing_mode mode) {
  if (f.size() > 32)
    throw std::invalid_argument("oracle limited to 32 sets");
  const int m = static_cast<int>(f.size());
  std::vector<std::uint32_t> adj(m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j && crosses(f[i], f[j], f.ground(), mode))
        adj[i] |= std::uint32_t{1} << j;
  return adj;
}

// Some `need` vertices of `cand` pairwise adjacent.
inline bool mask_has_clique(const std::vector<std::uint32_t> &adj, std::uint32_t cand, int need) {
  if (need <= 0)
    return true;
  if (std::popcount(cand) < need)
    return false;
  while (cand) {
    int v = std::countr_zero(cand);
    cand &= cand - 1;
    if (mask_has_clique(adj, cand & adj[v], need - 1))
      return true;
  }
  return false;
}

/// Every k-subset of the family tried in turn.
inline bool brute_has_witness(const family &f, int k, crossing_mode mode) {
  const int m = static_cast<int>(f.size());
  std::vector<int> pick;
  std::function<bool(int)> go = [&](int from) {
    if (static_cast<int>(pick.size()) == k)
      return true;
    for (int v = from; v < m; ++v) {
      bool ok = true;
      for (int u : pick)
        ok = ok && crosses(f[u], f[v], f.ground(), mode);
      if (!ok)
        continue;
      pick.push_back(v);
      if (go(v + 1))
        return true;
      pick.pop_back();
    }
    return false;
  };
  return go(0);
}

/// Largest subfamily without k pairwise crossing members, over all 2^|universe| subfamilies.
inline std::size_t brute_max_cross_free(const family &universe, int k, crossing_mode mode) {
  if (universe.size() > 24)
    throw std::invalid_argument("enumeration limited to 24 sets");
  auto adj = small_adjacency(universe, mode);
  const std::uint32_t limit = std::uint32_t{1} << universe.size();
  int best = 0;
  for (std::uint32_t s = 0; s < limit; ++s) {
    int size = std::popcount(s);
    if (size > best && !mask_has_clique(adj, s, k))
      best = size;
  }
  return static_cast<std::size_t>(best);
}

inline bool comparable(subset_mask a, subset_mask b) { return is_subset(a, b) || is_subset(b, a); }

/// Minimum number of chains covering the family, by dynamic programming over subsets.
inline int brute_min_chain_cover(const family &f) {
  const int m = static_cast<int>(f.size());
  if (m > 14)
    throw std::invalid_argument("chain-cover oracle limited to 14 sets");
  const std::uint32_t full = (std::uint32_t{1} << m) - 1;
  std::vector<char> is_chain(full + 1, 1);
  for (std::uint32_t s = 1; s <= full; ++s) {
    int v = std::countr_zero(s);
    std::uint32_t rest = s & (s - 1);
    bool ok = is_chain[rest];
    for (std::uint32_t r = rest; ok && r; r &= r - 1)
      ok = comparable(f[v], f[std::countr_zero(r)]);
    is_chain[s] = ok;
  }
  std::vector<int> dp(full + 1, 0);
  for (std::uint32_t s = 1; s <= full; ++s) {
    std::uint32_t low = s & (~s + 1);
    std::uint32_t rest = s ^ low;
    int best = m + 1;
    for (std::uint32_t t = rest;; t = (t - 1) & rest) {
      if (is_chain[t | low])
        best = std::min(best, 1 + dp[rest ^ t]);
      if (t == 0)
        break;
    }
    dp[s] = best;
  }
  return dp[full];
}

/// Largest pairwise incomparable subfamily.
inline int brute_max_antichain(const family &f) {
  const int m = static_cast<int>(f.size());
  if (m > 20)
    throw std::invalid_argument("antichain oracle limited to 20 sets");
  int best = 0;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << m); ++s) {
    bool ok = true;
    for (std::uint32_t a = s; ok && a; a &= a - 1)
      for (std::uint32_t b = a & (a - 1); ok && b; b &= b - 1)
        ok = !comparable(f[std::countr_zero(a)], f[std::countr_zero(b)]);
    if (ok)
      best = std::max(best, std::popcount(s));
  }
  return best;
}

} // namespace kcf::testing
