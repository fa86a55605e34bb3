#include "kcf/tree.hpp"

#include <algorithm>
#include <map>

namespace kcf {

namespace {

// Leftmost vertex of each depth of t, following first children from the root.
std::vector<int> leftmost_spine(const cross_support_tree &t) {
  std::vector<int> spine{t.root()};
  while (!t.is_leaf(spine.back()))
    spine.push_back(t.node(spine.back()).children.front());
  return spine;
}

std::vector<int> root_labels(const cross_support_tree &t) {
  std::vector<int> out;
  for (int c : t.node(t.root()).children)
    out.push_back(*t.node(c).edge_label);
  return out;
}

} // namespace

build_result build_tree(const chain_collection &cc, const std::vector<int> &selected_in, const ordering &ord, int k,
                        const build_options &opts) {
  if (opts.height < 0)
    throw precondition_error("tree height must be non-negative");
  std::vector<int> selected = selected_in;
  std::sort(selected.begin(), selected.end());
  selected.erase(std::unique(selected.begin(), selected.end()), selected.end());
  // C4 only feeds the size estimates, so the precondition is C1-C3.
  auto pre = check_conditions(cc, selected, ord, k, 0);
  if (!pre.all_pass())
    throw precondition_error("chains violate " + pre.violations.front().condition);

  build_result result;
  if (selected.empty())
    return result;
  const int h = cc[selected.front()].h();
  const int top = opts.pool_top > 0 ? opts.pool_top : h;
  auto by_rank_desc = [&](int a, int b) { return ord.precedes(b, a); };

  std::map<int, cross_support_tree> current;
  for (int i : selected)
    current.emplace(i, cross_support_tree(i));
  result.trace.levels.push_back({0, selected, {}, {}});

  for (int level = 1; level <= opts.height; ++level) {
    std::map<int, std::vector<int>> y, z;
    for (const auto &[i, t] : current) {
      std::vector<int> labels = t.is_leaf(t.root()) ? cc[i].added : root_labels(t);
      std::sort(labels.begin(), labels.end(), by_rank_desc);
      y[i] = labels;
      // ≺-greatest half, rounded up.
      z[i].assign(labels.begin(), labels.begin() + static_cast<long>((labels.size() + 1) / 2));
    }

    build_level lv;
    lv.level = level;
    std::map<int, std::vector<int>> pools, tops;
    for (int x = 0; x < cc.n(); ++x) {
      std::vector<int> pool;
      for (const auto &[i, zi] : z)
        if (std::find(zi.begin(), zi.end(), x) != zi.end())
          pool.push_back(i);
      if (pool.empty())
        continue;
      // {C_i(x)} is a chain by C1; order it from the top down.
      std::sort(pool.begin(), pool.end(), [&](int a, int b) {
        return cardinality(cc[a].below(x)) > cardinality(cc[b].below(x));
      });
      std::vector<int> head(pool.begin(), pool.begin() + std::min<long>(top, static_cast<long>(pool.size())));
      lv.pools.emplace_back(x, pool);
      lv.tops.emplace_back(x, head);
      pools[x] = std::move(pool);
      tops[x] = std::move(head);
    }

    std::map<int, cross_support_tree> next;
    for (const auto &[i, t] : current) {
      bool excluded = false;
      for (const auto &[x, head] : tops)
        excluded |= std::find(head.begin(), head.end(), i) != head.end();
      if (excluded)
        continue;

      build_root_trace rt;
      rt.level = level;
      rt.root = i;
      rt.y = y[i];
      rt.z = z[i];

      // Distinct representatives, leftmost label first, each taking the
      // highest unused chain of its pool.
      std::map<int, int> rep;
      std::vector<int> taken;
      for (int x : z[i]) {
        for (int j : tops[x])
          if (std::find(taken.begin(), taken.end(), j) == taken.end() &&
              is_proper_subset(cc[i].below(x), cc[j].below(x))) {
            rep[x] = j;
            taken.push_back(j);
            rt.representatives.emplace_back(x, j);
            break;
          }
      }

      // T'_x: j_x's tree without root children whose label comes after x.
      std::map<int, cross_support_tree> pruned;
      for (const auto &[x, j] : rep) {
        const cross_support_tree &tj = current.at(j);
        if (tj.is_leaf(tj.root())) {
          pruned.emplace(x, tj);
          continue;
        }
        std::vector<int> keep;
        auto labels = root_labels(tj);
        for (std::size_t pos = 0; pos < labels.size(); ++pos)
          if (!ord.precedes(x, labels[pos]))
            keep.push_back(static_cast<int>(pos));
        pruned.emplace(x, prune_root_children(tj, keep));
      }

      // Q: the leftmost S-sets at every depth must form a chain.
      std::vector<int> q;
      for (int x : z[i])
        if (rep.count(x))
          q.push_back(x);
      for (int d = 0; d < level && !q.empty(); ++d) {
        std::map<subset_mask, std::vector<int>> owners;
        for (int x : q) {
          const cross_support_tree &tx = pruned.at(x);
          int u = leftmost_spine(tx)[d];
          int lab = d == 0 ? x : *tx.node(u).edge_label;
          owners[cc[tx.node(u).chain].below(lab)].push_back(x);
        }
        std::vector<subset_mask> sets;
        for (const auto &entry : owners)
          sets.push_back(entry.first);
        auto parts = dilworth_partition(family(cc.ground(), sets));
        std::vector<int> best;
        for (const auto &ch : parts.chains) {
          std::vector<int> members;
          for (subset_mask s : ch)
            for (int x : owners[s])
              members.push_back(x);
          if (members.size() > best.size())
            best = std::move(members);
        }
        std::vector<int> filtered;
        for (int x : q)
          if (std::find(best.begin(), best.end(), x) != best.end())
            filtered.push_back(x);
        q = std::move(filtered);
      }
      rt.q = q;
      result.trace.roots.push_back(rt);
      if (q.empty())
        continue;

      cross_support_tree tree(i);
      for (int x : q) // z[i] is already ≻-decreasing
        tree.graft(tree.root(), pruned.at(x), x);
      auto report = validate_tree(tree, cc, ord, &selected);
      if (!report.valid())
        throw std::logic_error("builder produced an invalid tree at level " + std::to_string(level) + " (" +
                               report.failed_checks().front() + ")");
      next.emplace(i, std::move(tree));
    }

    for (const auto &entry : next)
      lv.roots.push_back(entry.first);
    result.trace.levels.push_back(std::move(lv));
    current = std::move(next);
  }

  for (auto &[i, t] : current) {
    bool branching_ok = true;
    for (std::size_t v = 0; v < t.size(); ++v)
      if (!t.is_leaf(static_cast<int>(v)) &&
          t.node(static_cast<int>(v)).children.size() < static_cast<std::size_t>(opts.branching))
        branching_ok = false;
    if (branching_ok && !result.best)
      result.best = t;
    result.trees.emplace_back(i, t);
  }
  return result;
}

} // namespace kcf
