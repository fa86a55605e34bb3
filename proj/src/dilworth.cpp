#include "kcf/crossing.hpp"

#include <stdexcept>

namespace kcf {

namespace {

// Bipartite matching between "lower" and "upper" copies of the family; an
// edge i -> j means F_i is a proper subset of F_j.
struct inclusion_matching {
  std::vector<std::vector<int>> up;
  std::vector<int> succ; // matched upper partner of lower i, or -1
  std::vector<int> pred; // matched lower partner of upper j, or -1
  std::vector<char> seen;

  explicit inclusion_matching(const family &f) {
    const int m = static_cast<int>(f.size());
    up.resize(m);
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (is_proper_subset(f[i], f[j]))
          up[i].push_back(j);
    succ.assign(m, -1);
    pred.assign(m, -1);
  }

  bool augment(int i) {
    for (int j : up[i]) {
      if (seen[j])
        continue;
      seen[j] = 1;
      if (pred[j] < 0 || augment(pred[j])) {
        succ[i] = j;
        pred[j] = i;
        return true;
      }
    }
    return false;
  }

  void solve() {
    const int m = static_cast<int>(up.size());
    // Greedy start on immediate covers keeps the augmenting phase short.
    for (int i = 0; i < m; ++i)
      for (int j : up[i])
        if (pred[j] < 0) {
          succ[i] = j;
          pred[j] = i;
          break;
        }
    for (int i = 0; i < m; ++i) {
      if (succ[i] >= 0)
        continue;
      seen.assign(m, 0);
      augment(i);
    }
  }
};

} // namespace

chain_decomposition dilworth_partition(const family &f) {
  const int m = static_cast<int>(f.size());
  inclusion_matching mt(f);
  mt.solve();

  chain_decomposition out;
  for (int start = 0; start < m; ++start) {
    if (mt.pred[start] >= 0)
      continue;
    std::vector<subset_mask> chain;
    for (int v = start; v >= 0; v = mt.succ[v])
      chain.push_back(f[v]);
    out.chains.push_back(std::move(chain));
  }

  // König: alternate from unmatched lower vertices; an element whose lower
  // copy is reached and upper copy is not lies outside the minimum cover.
  std::vector<char> lower_reached(m, 0), upper_reached(m, 0);
  std::vector<int> stack;
  for (int i = 0; i < m; ++i)
    if (mt.succ[i] < 0) {
      lower_reached[i] = 1;
      stack.push_back(i);
    }
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j : mt.up[i]) {
      if (upper_reached[j])
        continue;
      upper_reached[j] = 1;
      int back = mt.pred[j];
      if (back >= 0 && !lower_reached[back]) {
        lower_reached[back] = 1;
        stack.push_back(back);
      }
    }
  }
  for (int i = 0; i < m; ++i)
    if (lower_reached[i] && !upper_reached[i])
      out.max_antichain.push_back(f[i]);

  if (out.max_antichain.size() != out.chains.size())
    throw std::logic_error("chain partition and antichain certificate disagree");
  for (std::size_t a = 0; a < out.max_antichain.size(); ++a)
    for (std::size_t b = a + 1; b < out.max_antichain.size(); ++b)
      if (is_subset(out.max_antichain[a], out.max_antichain[b]) ||
          is_subset(out.max_antichain[b], out.max_antichain[a]))
        throw std::logic_error("antichain certificate has comparable members");
  return out;
}

} // namespace kcf
