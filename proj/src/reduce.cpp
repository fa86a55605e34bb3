#include "kcf/reduce.hpp"

#include "kcf/family_io.hpp"

namespace kcf {

reduction weak_reduce(const family &f, int k) {
  if (auto w = find_pairwise_crossing_witness(f, k, crossing_mode::strict))
    throw not_cross_free_error("family is not " + std::to_string(k) + "-cross-free", *w);

  const ground_set ground = f.ground();
  reduction best{family(ground), -1, false};
  std::size_t best_size = 0;
  bool have = false;
  for (int x = 0; x < ground.size(); ++x) {
    std::vector<subset_mask> avoid, hit;
    for (subset_mask a : f)
      (contains(a, x) ? hit : avoid).push_back(a);
    const bool complemented = 2 * avoid.size() < f.size();
    const std::size_t size = complemented ? hit.size() : avoid.size();
    if (have && (size < best_size || (size == best_size && (complemented || !best.complemented))))
      continue;
    if (complemented)
      for (subset_mask &a : hit)
        a = ground.complement(a);
    best = {family(ground, complemented ? hit : avoid), x, complemented};
    best_size = size;
    have = true;
  }

  if (find_pairwise_crossing_witness(best.result, k, crossing_mode::weak))
    throw std::logic_error("reduced family still has weakly crossing members");
  if (2 * best.result.size() < f.size())
    throw std::logic_error("reduced family is smaller than half the input");
  return best;
}

} // namespace kcf
