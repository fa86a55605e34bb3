#pragma once

#include "kcf/family.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace kcf {

constexpr std::size_t max_search_universe = 4096;

struct search_options {
  int threads = 0;                 // 0: the OpenMP default
  std::uint64_t node_limit = 0;    // 0: unlimited
};

struct search_result {
  family best{ground_set(1)};
  std::size_t size = 0;
  bool proven_optimal = false;
  std::uint64_t nodes_explored = 0;
  std::chrono::duration<double> elapsed{};
};

/// Largest subfamily of `universe` without k pairwise crossing members, the
/// lexicographically least one (by canonical indices) among all optima.
/// Branches are split by their first chosen member and run under OpenMP.
search_result max_cross_free(const family &universe, int k, crossing_mode mode, const search_options &opts = {});
/// Single-threaded reference for the same search.
search_result max_cross_free_serial(const family &universe, int k, crossing_mode mode,
                                    const search_options &opts = {});

/// Upper bound on the size of an ℓ-uniform k-cross-free family over n elements.
long uniform_level_cap(int n, int level, int k, crossing_mode mode);

enum class universe_kind { all, intervals };

std::string to_string(universe_kind u);
universe_kind parse_universe_kind(const std::string &s);

/// all: every subset, ∅ and X included. intervals: nonempty proper cyclic intervals.
family make_universe(universe_kind u, int n);
/// Largest n the exact table accepts for a universe.
int feasible_n_limit(universe_kind u);

struct bound_row {
  int n = 0;
  int k = 0;
  universe_kind universe = universe_kind::all;
  crossing_mode mode = crossing_mode::strict;
  std::size_t exact = 0;
  bool proven_optimal = false;
  std::optional<long> formula;
  std::string formula_name = "none";
  std::optional<bool> tight; // empty where no optimality is claimed
};

/// The known bound for a (universe, mode, k) combination, evaluated at n.
std::optional<std::pair<std::string, long>> known_bound(universe_kind u, crossing_mode mode, int n, int k);

std::vector<bound_row> bound_table(int n_lo, int n_hi, int k_lo, int k_hi, universe_kind u, crossing_mode mode,
                                   const search_options &opts = {});

} // namespace kcf
