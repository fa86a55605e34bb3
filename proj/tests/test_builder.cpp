#include "kcf/tree.hpp"
#include "kcf/rng.hpp"

#include <doctest.h>

#include <numeric>

using namespace kcf;

namespace {

// Chains [a, w) + w, w+1, ..., w+h-1 over n = w + h, so C_i(x) = [a_i, x).
chain_collection interval_chains(const std::vector<int> &starts, int w, int h) {
  std::vector<chain> chains;
  for (int a : starts) {
    chain c;
    for (int e = a; e < w; ++e)
      c.base |= bit(e);
    for (int e = w; e < w + h; ++e)
      c.added.push_back(e);
    chains.push_back(std::move(c));
  }
  return chain_collection(ground_set(w + h), std::move(chains));
}

std::vector<int> all_indices(const chain_collection &cc) {
  std::vector<int> v(cc.size());
  std::iota(v.begin(), v.end(), 0);
  return v;
}

} // namespace

TEST_CASE("height zero returns every selected chain as a single vertex") {
  auto cc = interval_chains({0, 5, 10}, 15, 4);
  auto res = build_tree(cc, {2, 0}, ordering::identity(cc.n()), 2, {0, 1, 0});
  REQUIRE(res.trees.size() == 2);
  CHECK(res.trees[0].first == 0);
  CHECK(res.trees[0].second.size() == 1);
  REQUIRE(res.best);
  CHECK(*res.best == cross_support_tree(0));
}

TEST_CASE("one level with two children") {
  // Chain 0 has the smallest sets, so C_0(x) sits below C_1(x) and C_2(x).
  auto cc = interval_chains({10, 0, 5}, 15, 4);
  build_options opts;
  opts.height = 1;
  opts.branching = 2;
  opts.pool_top = 2;
  auto res = build_tree(cc, all_indices(cc), ordering::identity(cc.n()), 2, opts);
  REQUIRE(res.best);
  cross_support_tree expect(0);
  expect.add_child(0, 1, 18);
  expect.add_child(0, 2, 17);
  CHECK(*res.best == expect);
  CHECK(validate_tree(*res.best, cc, ordering::identity(cc.n())).valid());
  REQUIRE(res.trace.levels.size() == 2);
  CHECK(res.trace.levels[1].roots == std::vector<int>{0});
  REQUIRE(res.trace.roots.size() == 1);
  CHECK(res.trace.roots[0].z == std::vector<int>{18, 17});
  CHECK(res.trace.roots[0].representatives == std::vector<std::pair<int, int>>{{18, 1}, {17, 2}});
}

TEST_CASE("the default pool size excludes every root of a small collection") {
  auto cc = interval_chains({0, 5, 10}, 15, 4);
  build_options opts;
  opts.height = 1;
  opts.branching = 2;
  auto res = build_tree(cc, all_indices(cc), ordering::identity(cc.n()), 2, opts);
  CHECK(res.trees.empty());
  CHECK_FALSE(res.best);
}

TEST_CASE("chains without shared elements give no tree") {
  chain_collection cc(ground_set(6), {chain{make_mask({0}), {1, 2}}, chain{make_mask({3}), {4, 5}}});
  build_options opts;
  opts.height = 1;
  opts.pool_top = 1;
  auto res = build_tree(cc, {0, 1}, ordering::identity(6), 2, opts);
  CHECK(res.trees.empty());
  CHECK_FALSE(res.best);
}

TEST_CASE("builder preconditions") {
  auto cc = interval_chains({0, 3}, 6, 4); // member sizes interleave
  CHECK_THROWS_AS(build_tree(cc, {0, 1}, ordering::identity(cc.n()), 2, {1, 1, 1}), precondition_error);
  auto ok = interval_chains({0, 5}, 10, 4);
  CHECK_THROWS_AS(build_tree(ok, {0, 1}, ordering::identity(ok.n()), 2, {-1, 1, 1}), precondition_error);
  std::vector<int> reversed(ok.n());
  std::iota(reversed.rbegin(), reversed.rend(), 0);
  CHECK_THROWS_AS(build_tree(ok, {0, 1}, ordering(reversed), 2, {1, 1, 1}), precondition_error);
  CHECK(build_tree(ok, {}, ordering::identity(ok.n()), 2, {1, 1, 1}).trees.empty());
}

TEST_CASE("every built tree is a valid cross-support tree") {
  seeded_rng rng(31);
  int built = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int h = 2 + static_cast<int>(rng.below(4));
    const int chains = 2 + static_cast<int>(rng.below(8));
    const int gap = h + 1 + static_cast<int>(rng.below(2));
    if ((chains - 1) * gap + 1 + h > max_ground_size)
      continue;
    std::vector<int> starts;
    for (int c = 0; c < chains; ++c)
      starts.push_back(c * gap);
    const int w = starts.back() + 1;
    auto cc = interval_chains(starts, w, h);
    auto sel = all_indices(cc);
    build_options opts;
    opts.height = 1 + static_cast<int>(rng.below(2));
    opts.branching = 1 + static_cast<int>(rng.below(2));
    opts.pool_top = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(chains)));
    auto res = build_tree(cc, sel, ordering::identity(cc.n()), 2, opts);
    for (const auto &[root, t] : res.trees) {
      CHECK(t.node(t.root()).chain == root);
      CHECK(t.height() == opts.height);
      CHECK(validate_tree(t, cc, ordering::identity(cc.n()), &sel).valid());
      ++built;
    }
    if (res.best)
      for (std::size_t v = 0; v < res.best->size(); ++v)
        if (!res.best->is_leaf(static_cast<int>(v)))
          CHECK(res.best->node(static_cast<int>(v)).children.size() >= static_cast<std::size_t>(opts.branching));
  }
  CHECK(built > 0);
}
