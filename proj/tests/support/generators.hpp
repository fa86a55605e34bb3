#pragma once

// Hand-rolled random inputs for property tests.

#include "kcf/constructions.hpp"
#include "kcf/graph.hpp"
#include "kcf/rng.hpp"

#include <vector>

namespace kcf::testing {

inline subset_mask random_subset(seeded_rng &rng, int n) {
  return rng.next() & ground_set(n).full();
}

/// Each subset of the n-set kept with probability p (n <= 12).
inline family random_family(seeded_rng &rng, int n, double p) {
  std::vector<subset_mask> sets;
  for (subset_mask a = 0; a <= ground_set(n).full(); ++a)
    if (rng.coin(p))
      sets.push_back(a);
  return family(ground_set(n), std::move(sets));
}

inline family all_subsets(int n) {
  std::vector<subset_mask> sets;
  for (subset_mask a = 0; a <= ground_set(n).full(); ++a)
    sets.push_back(a);
  return family(ground_set(n), std::move(sets));
}

/// `count` random draws (duplicates merge).
inline family random_draws(seeded_rng &rng, int n, int count) {
  std::vector<subset_mask> sets;
  for (int i = 0; i < count; ++i)
    sets.push_back(random_subset(rng, n));
  return family(ground_set(n), std::move(sets));
}

/// Random sets that all contain element `pivot`, so the family is intersecting.
inline family random_intersecting(seeded_rng &rng, int n, int count) {
  const int pivot = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
  std::vector<subset_mask> sets;
  for (int i = 0; i < count; ++i)
    sets.push_back(random_subset(rng, n) | bit(pivot));
  return family(ground_set(n), std::move(sets));
}

/// All subsets of one size, each kept with probability p.
inline family random_uniform(seeded_rng &rng, int n, int level, double p) {
  std::vector<subset_mask> sets;
  for (subset_mask a = 0; a <= ground_set(n).full(); ++a)
    if (cardinality(a) == level && rng.coin(p))
      sets.push_back(a);
  return family(ground_set(n), std::move(sets));
}

inline graph random_graph(seeded_rng &rng, int order, double p) {
  graph g(order);
  for (int u = 0; u < order; ++u)
    for (int v = u + 1; v < order; ++v)
      if (rng.coin(p))
        g.add_edge(u, v);
  return g;
}

inline crossing_mode random_mode(seeded_rng &rng) { return rng.coin(0.5) ? crossing_mode::strict : crossing_mode::weak; }

} // namespace kcf::testing
