#pragma once

#include "kcf/family.hpp"

#include <cstdint>

namespace kcf {

/// {start, start+1, ..., start+length-1} modulo n. Length 0 is the empty set
/// and length n the whole ground set; both are stored with start 0.
struct cyclic_interval {
  int start = 0;
  int length = 0;

  static cyclic_interval make(int start, int length, int n);
  subset_mask mask(int n) const;
};

/// ∅, every singleton, and the internal nodes (root included) of a balanced
/// binary split of 0..n-1 where the left part takes ceil(m/2) elements.
/// Laminar, of size exactly 2n.
family gen_laminar_max(int n);

/// All n(n-1) nonempty proper cyclic intervals, plus ∅ and X on request.
family gen_cyclic_intervals(int n, bool include_trivial);

/// Randomised greedy: scan all 2^n subsets in a seeded order, keeping each one
/// that does not complete k pairwise crossing members. Requires n <= 12.
family gen_random_cross_free(int n, int k, crossing_mode mode, std::uint64_t seed);

/// Same greedy restricted to an explicit candidate list (scanned in seeded order),
/// stopping once `max_size` sets are kept.
family greedy_cross_free(const ground_set &ground, std::vector<subset_mask> candidates, int k, crossing_mode mode,
                         std::uint64_t seed, std::size_t max_size);

} // namespace kcf
