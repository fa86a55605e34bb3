#pragma once

#include "kcf/family.hpp"
#include "kcf/graph.hpp"

#include <optional>
#include <vector>

namespace kcf {

/// Graph on a family's canonical indices; edges join crossing (strict) or
/// weakly-crossing (weak) members.
struct crossing_graph {
  crossing_mode mode = crossing_mode::strict;
  graph adjacency;

  int order() const { return adjacency.order(); }
};

/// OpenMP row-parallel construction.
crossing_graph build_crossing_graph(const family &f, crossing_mode mode);
/// Serial reference kept for testing the parallel kernel.
crossing_graph build_crossing_graph_serial(const family &f, crossing_mode mode);

/// k members of a family that pairwise cross under `mode`. Re-verified on construction.
class witness {
public:
  witness(const family &f, std::vector<int> indices, crossing_mode mode);

  const std::vector<int> &indices() const { return indices_; }
  const std::vector<subset_mask> &sets() const { return sets_; }
  crossing_mode mode() const { return mode_; }
  std::size_t size() const { return sets_.size(); }

private:
  std::vector<int> indices_;
  std::vector<subset_mask> sets_;
  crossing_mode mode_;
};

/// Lexicographically least k-clique (by canonical indices) of `g`, if any.
std::optional<std::vector<int>> find_k_clique(const graph &g, int k);

/// True when the subgraph induced by `within` has a clique of `size` vertices.
bool has_clique_within(const graph &g, const vertex_set &within, int size);

/// Exact search for k pairwise (weakly-)crossing members; returns the
/// lexicographically least witness under canonical order.
std::optional<witness> find_pairwise_crossing_witness(const family &f, int k, crossing_mode mode);

struct chain_decomposition {
  std::vector<std::vector<subset_mask>> chains; // each ascending by strict inclusion
  std::vector<subset_mask> max_antichain;       // certificate: |max_antichain| == chains.size()
};

/// Minimum chain partition via maximum bipartite matching on strict inclusion,
/// with a maximum antichain recovered from the König cover.
chain_decomposition dilworth_partition(const family &f);

/// Minimum-degree greedy; size is at least |V|/(d+1) for average degree d.
std::vector<int> greedy_independent_set(const graph &g);

struct rational {
  long num = 0;
  long den = 1;
};

struct uniform_report {
  bool is_uniform = false;
  int level = -1;                // the common cardinality when uniform
  std::optional<rational> bound; // (k-1) n / level, absent when level == 0
  std::size_t size = 0;
  bool violates = false;
};

uniform_report uniform_bound_report(const family &f, int k);

} // namespace kcf
