#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace kcf {

/// A subset of the ground set {0, ..., n-1}; element e is present iff bit e is set.
using subset_mask = std::uint64_t;

constexpr int max_ground_size = 64;

inline subset_mask bit(int e) { return subset_mask{1} << e; }
inline int cardinality(subset_mask a) { return std::popcount(a); }
inline bool is_subset(subset_mask a, subset_mask b) { return (a & ~b) == 0; }
inline bool is_proper_subset(subset_mask a, subset_mask b) { return a != b && is_subset(a, b); }
inline bool contains(subset_mask a, int e) { return (a >> e) & 1U; }

subset_mask make_mask(std::initializer_list<int> elements);
std::vector<int> elements_of(subset_mask a);

/// Canonical set order: ascending cardinality, ties by numeric value.
inline bool canonical_less(subset_mask a, subset_mask b) {
  int ca = cardinality(a), cb = cardinality(b);
  return ca != cb ? ca < cb : a < b;
}

class ground_set {
public:
  explicit ground_set(int n);

  int size() const { return n_; }
  subset_mask full() const { return n_ == 64 ? ~subset_mask{0} : (subset_mask{1} << n_) - 1; }
  bool valid(subset_mask a) const { return (a & ~full()) == 0; }
  subset_mask complement(subset_mask a) const { return full() & ~a; }

  friend bool operator==(const ground_set &, const ground_set &) = default;

private:
  int n_;
};

enum class pair_relation { crossing, weak_only, comparable, disjoint, equal };

std::string to_string(pair_relation r);

/// Exhaustive taxonomy of an ordered pair. Comparable takes precedence over
/// disjoint, so the empty set is comparable with everything.
pair_relation classify_pair(subset_mask a, subset_mask b, const ground_set &ground);

enum class crossing_mode { strict, weak };

std::string to_string(crossing_mode m);
crossing_mode parse_crossing_mode(const std::string &s);

/// Crossing (all four Venn regions) or, in weak mode, also the case A∪B = X.
inline bool crosses(subset_mask a, subset_mask b, const ground_set &ground, crossing_mode mode) {
  if ((a & b) == 0 || (a & ~b) == 0 || (b & ~a) == 0)
    return false;
  return mode == crossing_mode::weak || (a | b) != ground.full();
}

/// Deduplicated collection of subsets over one ground set, kept in canonical order.
class family {
public:
  explicit family(ground_set ground) : ground_(ground) {}
  family(ground_set ground, std::vector<subset_mask> sets);

  const ground_set &ground() const { return ground_; }
  int n() const { return ground_.size(); }
  std::span<const subset_mask> sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }
  subset_mask operator[](std::size_t i) const { return sets_[i]; }
  auto begin() const { return sets_.begin(); }
  auto end() const { return sets_.end(); }

  /// Canonical index of `a`, or -1.
  int index_of(subset_mask a) const;
  bool contains(subset_mask a) const { return index_of(a) >= 0; }

  friend bool operator==(const family &, const family &) = default;

private:
  ground_set ground_;
  std::vector<subset_mask> sets_;
};

struct family_flags {
  bool is_chain = false;
  bool is_continuous_chain = false;
  bool is_antichain = false;
  bool is_intersecting = false;
  bool is_laminar = false;
};

family_flags family_predicates(const family &f);

family complement_closure(const family &f);

/// Sets of `f` selected by canonical indices.
family subfamily(const family &f, std::span<const int> indices);

} // namespace kcf
