#pragma once

#include "kcf/chains.hpp"
#include "kcf/tree.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kcf::testing {

std::string source_path(const std::string &relative);
std::string read_file(const std::string &relative);

// Nested description of a tree, convenient for building mutated copies.
struct tree_spec {
  int chain = 0;
  std::optional<int> label;
  std::vector<tree_spec> children;
};

cross_support_tree make_tree(const tree_spec &spec);

struct example_fixture {
  chain_collection cc;
  ordering ord;
  cross_support_tree tree;
};

// The example tree, loaded from data/example_tree (1-based files, shifted on load).
example_fixture load_example();
// The same tree written out in code, 0-based.
tree_spec example_spec();
chain_collection example_chains();
ordering example_ordering();

struct example_mutation {
  std::string name;
  std::string expected; // first failing check in the order perfect, T1..T5
  tree_spec tree;
};

std::vector<example_mutation> example_mutations();

/// First failing check among perfect, T1..T5; empty when all pass.
std::string first_failure(const tree_report &r);

struct synthetic_options {
  int height = 3;
  int branching = 3;      // minimum children per non-leaf
  int extra_branching = 0; // children counts drawn from [branching, branching + extra]
  int k = 3;              // the k declared for C4
  bool monotone = true;   // false may break T5 while keeping T1-T4
};

// Chains with interval bases [a, w) and additions w, w+1, ..., w+h-1, so that
// every C_i(x) is the interval [a_i, x). Vertices at deeper levels use chains
// with smaller a, and a grows left to right within a level.
struct synthetic_tree {
  chain_collection cc;
  ordering ord;
  cross_support_tree tree;
  std::vector<int> chain_ids;
  int k = 3;
  int multiplier = 0; // C4 multiplier the chains satisfy
};

synthetic_tree make_synthetic_tree(const synthetic_options &opts, std::uint64_t seed);

} // namespace kcf::testing
