#pragma once

#include "kcf/crossing.hpp"
#include "kcf/family.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kcf {

/// Total order on the ground set, stored as the elements listed from the
/// ≺-least to the ≺-greatest.
class ordering {
public:
  explicit ordering(std::vector<int> least_first);
  static ordering identity(int n);

  int size() const { return static_cast<int>(order_.size()); }
  int position(int e) const { return position_[e]; }
  bool precedes(int x, int y) const { return position_[x] < position_[y]; }
  const std::vector<int> &elements() const { return order_; }

  friend bool operator==(const ordering &, const ordering &) = default;

private:
  std::vector<int> order_;
  std::vector<int> position_;
};

/// Continuous chain base ⊂ base+{x1} ⊂ ... ⊂ base+{x1..xh}.
struct chain {
  subset_mask base = 0;
  std::vector<int> added;

  int h() const { return static_cast<int>(added.size()); }
  subset_mask support() const;
  subset_mask top() const { return base | support(); }
  std::vector<subset_mask> members() const;
  bool in_support(int x) const { return contains(support(), x); }
  /// Largest member not containing x; x must be in the support.
  subset_mask below(int x) const;
  bool has_member(subset_mask a) const;
  int min_size() const { return cardinality(base); }
  int max_size() const { return cardinality(base) + h(); }
};

/// Indexed pairwise-disjoint continuous chains over one ground set.
class chain_collection {
public:
  explicit chain_collection(ground_set ground) : ground_(ground) {}
  /// Throws std::invalid_argument when a chain is malformed or two chains share a member.
  chain_collection(ground_set ground, std::vector<chain> chains);

  const ground_set &ground() const { return ground_; }
  int n() const { return ground_.size(); }
  std::size_t size() const { return chains_.size(); }
  bool empty() const { return chains_.empty(); }
  const chain &operator[](std::size_t i) const { return chains_[i]; }
  const std::vector<chain> &chains() const { return chains_; }

  /// Common h when all chains agree, otherwise nullopt (also for an empty collection).
  std::optional<int> uniform_h() const;

private:
  ground_set ground_;
  std::vector<chain> chains_;
};

struct successor_graph {
  int order = 0;
  std::vector<std::pair<int, int>> edges; // (A, A∪{x}) by canonical index, sorted
  std::vector<std::vector<int>> out;      // ascending
  std::vector<std::vector<int>> in;       // ascending
  std::vector<bool> exceptional;          // out-degree >= 2

  int out_degree(int v) const { return static_cast<int>(out[v].size()); }
  int in_degree(int v) const { return static_cast<int>(in[v].size()); }
};

successor_graph build_successor_graph(const family &f);

/// Greedy maximal family of vertex-disjoint length-h paths in the successor
/// graph, repeatedly taking the lexicographically least available path.
chain_collection extract_disjoint_chains(const family &f, int h);

struct condition_violation {
  std::string condition; // "C1".."C4"
  int i = -1;
  int j = -1;
  int x = -1;
  int y = -1;
  std::string detail;
};

struct condition_report {
  bool c1 = true, c2 = true, c3 = true, c4 = true;
  int threshold = 0; // C4 minimum member size
  std::vector<condition_violation> violations;

  bool all_pass() const { return c1 && c2 && c3 && c4; }
};

constexpr int default_min_size_multiplier = 3;

/// Exhaustive check of C1-C4 over the selected indices.
condition_report check_conditions(const chain_collection &cc, const std::vector<int> &selected, const ordering &ord,
                                  int k, int min_size_multiplier = default_min_size_multiplier);

struct element_choice {
  int element = -1;
  int chain_count = 0; // chains in the Dilworth partition of S_x
  int chosen = -1;     // index of the chain kept
  std::vector<subset_mask> kept;
};

struct conflict_stats {
  int vertices = 0;
  long edges = 0;
  int max_degree = 0;
  double average_degree = 0.0;
};

struct selection_trace {
  std::vector<element_choice> choices;
  std::vector<int> i0, i1, i2, i3, selected;
  conflict_stats conflicts;
};

struct selection_result {
  std::vector<int> selected;
  ordering order;
  selection_trace trace;
};

/// Four filtering stages producing an index set satisfying C1-C4:
/// seeded Dilworth-chain choice per element, seeded ordering, greedy
/// independent set of the size-overlap conflict graph, minimum-size filter.
selection_result select_conditioned_chains(const chain_collection &cc, int k, int min_size_multiplier,
                                           std::uint64_t seed);

} // namespace kcf
