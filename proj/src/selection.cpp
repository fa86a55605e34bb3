#include "kcf/chains.hpp"
#include "kcf/rng.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace kcf {

namespace {

bool comparable(subset_mask a, subset_mask b) { return is_subset(a, b) || is_subset(b, a); }

bool size_separated(const chain &a, const chain &b) { return a.max_size() < b.min_size() || b.max_size() < a.min_size(); }

std::vector<int> normalised(const chain_collection &cc, std::vector<int> idx) {
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  for (int i : idx)
    if (i < 0 || static_cast<std::size_t>(i) >= cc.size())
      throw std::invalid_argument("chain index " + std::to_string(i) + " out of range");
  return idx;
}

} // namespace

condition_report check_conditions(const chain_collection &cc, const std::vector<int> &selected_in, const ordering &ord,
                                  int k, int min_size_multiplier) {
  if (ord.size() != cc.n())
    throw std::invalid_argument("ordering size differs from the ground set");
  const std::vector<int> selected = normalised(cc, selected_in);
  condition_report r;
  r.threshold = min_size_multiplier * k * cc.uniform_h().value_or(0);

  auto fail = [&](bool &flag, condition_violation v) {
    flag = false;
    r.violations.push_back(std::move(v));
  };

  for (std::size_t a = 0; a < selected.size(); ++a) {
    const int i = selected[a];
    const chain &ci = cc[i];
    for (std::size_t b = a + 1; b < selected.size(); ++b) {
      const int j = selected[b];
      const chain &cj = cc[j];
      subset_mask shared = ci.support() & cj.support();
      if (!shared)
        continue;
      for (int x : elements_of(shared))
        if (!comparable(ci.below(x), cj.below(x)))
          fail(r.c1, {"C1", i, j, x, -1, "C_i(x) and C_j(x) incomparable"});
      if (!size_separated(ci, cj))
        fail(r.c3, {"C3", i, j, -1, -1, "member sizes interleave"});
    }
    for (int x : ci.added)
      for (int y : ci.added)
        if (x != y && ord.precedes(x, y) && !is_proper_subset(ci.below(x), ci.below(y)))
          fail(r.c2, {"C2", i, -1, x, y, "x ≺ y but C_i(x) not below C_i(y)"});
    const int threshold = min_size_multiplier * k * ci.h();
    if (ci.min_size() < threshold)
      fail(r.c4, {"C4", i, -1, -1, -1,
                  "minimum member size " + std::to_string(ci.min_size()) + " < " + std::to_string(threshold)});
  }
  return r;
}

selection_result select_conditioned_chains(const chain_collection &cc, int k, int min_size_multiplier,
                                           std::uint64_t seed) {
  if (k < 2)
    throw std::invalid_argument("k must be at least 2");
  if (!cc.empty() && !cc.uniform_h())
    throw std::invalid_argument("chains must all have the same length");
  const int n = cc.n();
  const int m = static_cast<int>(cc.size());
  seeded_rng rng(seed);
  selection_trace trace;
  trace.i0.resize(m);
  std::iota(trace.i0.begin(), trace.i0.end(), 0);

  // Stage 1: per element, keep one chain of a minimum chain partition of S_x.
  std::vector<char> keep(m, 1);
  for (int x = 0; x < n; ++x) {
    std::vector<int> holders;
    std::vector<subset_mask> sets;
    for (int i = 0; i < m; ++i)
      if (cc[i].in_support(x)) {
        holders.push_back(i);
        sets.push_back(cc[i].below(x) | bit(x));
      }
    if (holders.empty())
      continue;
    auto parts = dilworth_partition(family(cc.ground(), sets));
    element_choice choice;
    choice.element = x;
    choice.chain_count = static_cast<int>(parts.chains.size());
    choice.chosen = static_cast<int>(rng.below(parts.chains.size()));
    choice.kept = parts.chains[choice.chosen];
    for (std::size_t t = 0; t < holders.size(); ++t)
      if (std::find(choice.kept.begin(), choice.kept.end(), sets[t]) == choice.kept.end())
        keep[holders[t]] = 0;
    trace.choices.push_back(std::move(choice));
  }
  for (int i = 0; i < m; ++i)
    if (keep[i])
      trace.i1.push_back(i);

  // Stage 2: seeded ordering; a chain survives when its additions are ≺-increasing.
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  rng.shuffle(std::span<int>(perm));
  ordering ord(perm);
  for (int i : trace.i1) {
    const auto &added = cc[i].added;
    bool increasing = true;
    for (std::size_t t = 1; t < added.size(); ++t)
      increasing &= ord.precedes(added[t - 1], added[t]);
    if (increasing)
      trace.i2.push_back(i);
  }

  // Stage 3: independent set of the graph joining chains that share support
  // elements and have overlapping member sizes.
  const int m2 = static_cast<int>(trace.i2.size());
  graph conflicts(m2);
  for (int a = 0; a < m2; ++a)
    for (int b = a + 1; b < m2; ++b) {
      const chain &ca = cc[trace.i2[a]];
      const chain &cb = cc[trace.i2[b]];
      if ((ca.support() & cb.support()) && !size_separated(ca, cb))
        conflicts.add_edge(a, b);
    }
  trace.conflicts.vertices = m2;
  trace.conflicts.edges = conflicts.edge_count();
  trace.conflicts.average_degree = conflicts.average_degree();
  for (int a = 0; a < m2; ++a)
    trace.conflicts.max_degree = std::max(trace.conflicts.max_degree, conflicts.degree(a));
  for (int a : greedy_independent_set(conflicts))
    trace.i3.push_back(trace.i2[a]);

  // Stage 4: minimum member size.
  for (int i : trace.i3)
    if (cc[i].min_size() >= min_size_multiplier * k * cc[i].h())
      trace.selected.push_back(i);

  auto report = check_conditions(cc, trace.selected, ord, k, min_size_multiplier);
  if (!report.all_pass())
    throw std::logic_error("selected chains violate " + report.violations.front().condition);
  std::vector<int> selected = trace.selected;
  return {std::move(selected), std::move(ord), std::move(trace)};
}

} // namespace kcf
