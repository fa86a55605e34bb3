#include "kcf/constructions.hpp"

#include "kcf/crossing.hpp"
#include "kcf/rng.hpp"

#include <limits>
#include <stdexcept>

namespace kcf {

cyclic_interval cyclic_interval::make(int start, int length, int n) {
  if (n < 1 || length < 0 || length > n || start < 0 || start >= n)
    throw std::invalid_argument("cyclic interval out of range");
  if (length == 0 || length == n)
    start = 0;
  return {start, length};
}

subset_mask cyclic_interval::mask(int n) const {
  subset_mask m = 0;
  for (int t = 0; t < length; ++t)
    m |= bit((start + t) % n);
  return m;
}

namespace {

void add_split(int lo, int hi, std::vector<subset_mask> &out) {
  int m = hi - lo;
  if (m < 2)
    return;
  subset_mask range = 0;
  for (int e = lo; e < hi; ++e)
    range |= bit(e);
  out.push_back(range);
  int mid = lo + (m + 1) / 2;
  add_split(lo, mid, out);
  add_split(mid, hi, out);
}

} // namespace

family gen_laminar_max(int n) {
  ground_set ground(n);
  std::vector<subset_mask> sets{0};
  for (int e = 0; e < n; ++e)
    sets.push_back(bit(e));
  add_split(0, n, sets);
  return family(ground, std::move(sets));
}

family gen_cyclic_intervals(int n, bool include_trivial) {
  ground_set ground(n);
  std::vector<subset_mask> sets;
  for (int s = 0; s < n; ++s)
    for (int len = 1; len < n; ++len)
      sets.push_back(cyclic_interval::make(s, len, n).mask(n));
  if (include_trivial) {
    sets.push_back(0);
    sets.push_back(ground.full());
  }
  return family(ground, std::move(sets));
}

family greedy_cross_free(const ground_set &ground, std::vector<subset_mask> candidates, int k, crossing_mode mode,
                         std::uint64_t seed, std::size_t max_size) {
  if (k < 2)
    throw std::invalid_argument("k must be at least 2");
  seeded_rng rng(seed);
  rng.shuffle(std::span<subset_mask>(candidates));
  std::vector<subset_mask> kept;
  for (subset_mask s : candidates) {
    if (kept.size() >= max_size)
      break;
    // s is admissible unless k-1 of its crossing partners pairwise cross.
    std::vector<subset_mask> partners;
    for (subset_mask a : kept)
      if (crosses(s, a, ground, mode))
        partners.push_back(a);
    bool blocked = false;
    if (static_cast<int>(partners.size()) >= k - 1) {
      graph g(static_cast<int>(partners.size()));
      for (std::size_t i = 0; i < partners.size(); ++i)
        for (std::size_t j = i + 1; j < partners.size(); ++j)
          if (crosses(partners[i], partners[j], ground, mode))
            g.add_edge(static_cast<int>(i), static_cast<int>(j));
      blocked = find_k_clique(g, k - 1).has_value();
    }
    if (!blocked)
      kept.push_back(s);
  }
  family out(ground, std::move(kept));
  if (find_pairwise_crossing_witness(out, k, mode))
    throw std::logic_error("greedy cross-free generator produced a witness");
  return out;
}

family gen_random_cross_free(int n, int k, crossing_mode mode, std::uint64_t seed) {
  if (n < 1 || n > 12)
    throw std::invalid_argument("random cross-free generation supports 1 <= n <= 12");
  std::vector<subset_mask> all(std::size_t{1} << n);
  for (std::size_t s = 0; s < all.size(); ++s)
    all[s] = s;
  return greedy_cross_free(ground_set(n), std::move(all), k, mode, seed, std::numeric_limits<std::size_t>::max());
}

} // namespace kcf
