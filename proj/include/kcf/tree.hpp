#pragma once

#include "kcf/chains.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kcf {

class precondition_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct tree_node {
  int chain = -1;
  std::optional<int> edge_label; // label of the edge from the parent; empty at the root
  std::vector<int> children;     // node ids, left to right
  int parent = -1;
  int depth = 0;
};

/// Rooted tree with ordered children whose vertices name chains and whose
/// edges carry ground-set labels. Node 0 is the root.
class cross_support_tree {
public:
  explicit cross_support_tree(int root_chain);

  /// Appends a new rightmost child of `parent`; returns its id.
  int add_child(int parent, int chain, std::optional<int> label);
  /// Copies `sub` below `parent` as its new rightmost child, via an edge labelled `label`.
  int graft(int parent, const cross_support_tree &sub, std::optional<int> label);
  /// Copy of T[v] with v as the root.
  cross_support_tree subtree(int v) const;

  int root() const { return 0; }
  std::size_t size() const { return nodes_.size(); }
  const tree_node &node(int v) const { return nodes_[v]; }
  const std::vector<tree_node> &nodes() const { return nodes_; }
  bool is_leaf(int v) const { return nodes_[v].children.empty(); }
  int height() const;
  bool is_perfect() const;
  /// Node ids per depth, left to right.
  std::vector<std::vector<int>> levels() const;
  /// True when u lies in T[v] and every step from v down to u takes the leftmost child.
  bool is_leftmost_in(int u, int v) const;
  int ancestor_at_depth(int u, int depth) const;

  /// φ(v): the parent-edge label of a non-root vertex.
  std::optional<int> phi(int v) const;
  /// S_v = C_v(φ(v)), when φ(v) lies in the support of v's chain.
  std::optional<subset_mask> support_set(int v, const chain_collection &cc) const;

  friend bool operator==(const cross_support_tree &a, const cross_support_tree &b);

private:
  std::vector<tree_node> nodes_;
};

struct tree_violation {
  std::string check; // "perfect", "T1".."T8"
  int node = -1;
  int other = -1;
  std::string detail;
};

struct tree_report {
  std::vector<std::string> malformed; // structural defects that prevent evaluation
  std::vector<tree_violation> violations;

  bool failed(const std::string &check) const;
  bool is_malformed() const { return !malformed.empty(); }
  /// Perfect and T1-T5 hold.
  bool valid() const;
  bool t1_to_t4() const;
  /// Failures of the derived properties T6-T8.
  bool derived_ok() const;
  std::vector<std::string> failed_checks() const;
};

/// Literal check of perfection and T1-T5, with T6-T8 evaluated as derived
/// consequences. `allowed` (when given) is the index set vertices must come from.
tree_report validate_tree(const cross_support_tree &t, const chain_collection &cc, const ordering &ord,
                          const std::vector<int> *allowed = nullptr);

/// Keeps only the root children at the given left-to-right positions.
cross_support_tree prune_root_children(const cross_support_tree &t, const std::vector<int> &keep);

struct kcross_result {
  std::vector<int> path;          // v_1..v_k
  std::vector<int> labels;        // φ(v_i)
  std::vector<subset_mask> sets;  // A_i = S_{v_i} ∪ {φ(v_i)}
};

/// Greedy root-to-leaf path through non-leftmost children with fresh labels,
/// returning k pairwise weakly-crossing sets.
kcross_result extract_k_crossing_from_tree(const cross_support_tree &t, const chain_collection &cc,
                                           const ordering &ord, int k);

struct build_level {
  int level = 0;
  std::vector<int> roots;                               // I_ℓ
  std::vector<std::pair<int, std::vector<int>>> pools;  // x -> J_x
  std::vector<std::pair<int, std::vector<int>>> tops;   // x -> J_x^top
};

struct build_root_trace {
  int level = 0;
  int root = -1;
  std::vector<int> y, z, q;
  std::vector<std::pair<int, int>> representatives; // x -> j_x
};

struct build_trace {
  std::vector<build_level> levels;
  std::vector<build_root_trace> roots;
};

struct build_options {
  int height = 1;
  int branching = 1;
  /// |J_x^top|; 0 means the chain length h.
  int pool_top = 0;
};

struct build_result {
  std::vector<std::pair<int, cross_support_tree>> trees; // height-ℓ trees that validate, by root
  std::optional<cross_support_tree> best;                 // first one meeting the branching target
  build_trace trace;
};

/// Level-by-level construction of cross-support trees from chains satisfying C1-C4.
build_result build_tree(const chain_collection &cc, const std::vector<int> &selected, const ordering &ord, int k,
                        const build_options &opts);

} // namespace kcf
