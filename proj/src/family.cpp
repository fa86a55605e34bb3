#include "kcf/family.hpp"

#include <algorithm>

namespace kcf {

subset_mask make_mask(std::initializer_list<int> elements) {
  subset_mask m = 0;
  for (int e : elements)
    m |= bit(e);
  return m;
}

std::vector<int> elements_of(subset_mask a) {
  std::vector<int> out;
  out.reserve(cardinality(a));
  while (a) {
    out.push_back(std::countr_zero(a));
    a &= a - 1;
  }
  return out;
}

ground_set::ground_set(int n) : n_(n) {
  if (n < 1 || n > max_ground_size)
    throw std::invalid_argument("ground set size " + std::to_string(n) + " outside [1,64]");
}

std::string to_string(pair_relation r) {
  switch (r) {
  case pair_relation::crossing:
    return "crossing";
  case pair_relation::weak_only:
    return "weak_only";
  case pair_relation::comparable:
    return "comparable";
  case pair_relation::disjoint:
    return "disjoint";
  case pair_relation::equal:
    return "equal";
  }
  return "?";
}

pair_relation classify_pair(subset_mask a, subset_mask b, const ground_set &ground) {
  if (a == b)
    return pair_relation::equal;
  if (is_subset(a, b) || is_subset(b, a))
    return pair_relation::comparable;
  if ((a & b) == 0)
    return pair_relation::disjoint;
  return (a | b) == ground.full() ? pair_relation::weak_only : pair_relation::crossing;
}

std::string to_string(crossing_mode m) { return m == crossing_mode::strict ? "strict" : "weak"; }

crossing_mode parse_crossing_mode(const std::string &s) {
  if (s == "strict")
    return crossing_mode::strict;
  if (s == "weak")
    return crossing_mode::weak;
  throw std::invalid_argument("unknown crossing mode '" + s + "' (expected strict|weak)");
}

family::family(ground_set ground, std::vector<subset_mask> sets) : ground_(ground), sets_(std::move(sets)) {
  for (subset_mask a : sets_)
    if (!ground_.valid(a))
      throw std::invalid_argument("set has elements outside the ground set");
  std::sort(sets_.begin(), sets_.end(), canonical_less);
  sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
}

int family::index_of(subset_mask a) const {
  auto it = std::lower_bound(sets_.begin(), sets_.end(), a, canonical_less);
  if (it == sets_.end() || *it != a)
    return -1;
  return static_cast<int>(it - sets_.begin());
}

family_flags family_predicates(const family &f) {
  family_flags fl;
  fl.is_chain = fl.is_antichain = fl.is_intersecting = fl.is_laminar = true;
  auto s = f.sets();
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      bool comparable = is_subset(s[i], s[j]) || is_subset(s[j], s[i]);
      fl.is_chain &= comparable;
      fl.is_antichain &= !comparable;
      if ((s[i] & s[j]) == 0)
        fl.is_intersecting = false;
      if (crosses(s[i], s[j], f.ground(), crossing_mode::weak))
        fl.is_laminar = false;
    }
  }
  // A single empty set meets itself in nothing.
  if (s.size() == 1 && s[0] == 0)
    fl.is_intersecting = false;
  // Canonical order lists a chain bottom-up.
  fl.is_continuous_chain = fl.is_chain;
  for (std::size_t i = 1; fl.is_continuous_chain && i < s.size(); ++i)
    fl.is_continuous_chain = cardinality(s[i]) == cardinality(s[i - 1]) + 1;
  return fl;
}

family complement_closure(const family &f) {
  std::vector<subset_mask> sets(f.begin(), f.end());
  for (subset_mask a : f)
    sets.push_back(f.ground().complement(a));
  return family(f.ground(), std::move(sets));
}

family subfamily(const family &f, std::span<const int> indices) {
  std::vector<subset_mask> sets;
  sets.reserve(indices.size());
  for (int i : indices)
    sets.push_back(f[static_cast<std::size_t>(i)]);
  return family(f.ground(), std::move(sets));
}

} // namespace kcf
