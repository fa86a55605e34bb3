#include "support/fixtures.hpp"

#include "kcf/proof_io.hpp"
#include "kcf/rng.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace kcf::testing {

std::string source_path(const std::string &relative) { return std::string(KCF_SOURCE_DIR) + "/" + relative; }

std::string read_file(const std::string &relative) {
  std::ifstream in(source_path(relative));
  if (!in)
    throw std::runtime_error("cannot open " + relative);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

cross_support_tree make_tree(const tree_spec &spec) {
  cross_support_tree t(spec.chain);
  std::function<void(const tree_spec &, int)> add = [&](const tree_spec &s, int id) {
    for (const auto &c : s.children)
      add(c, t.add_child(id, c.chain, c.label));
  };
  add(spec, t.root());
  return t;
}

example_fixture load_example() {
  auto cc = parse_chain_collection(read_file("data/example_tree/chains.txt"));
  auto ord = parse_ordering(read_file("data/example_tree/ordering.txt"), cc.n());
  auto tree = parse_tree(read_file("data/example_tree/tree.json"));
  return {std::move(cc), std::move(ord), std::move(tree)};
}

namespace {

// Element lists numbered from 1.
subset_mask one_based(std::initializer_list<int> elements) {
  subset_mask m = 0;
  for (int e : elements)
    m |= bit(e - 1);
  return m;
}

enum example_chain { r, e, a, g, f, c, b };

} // namespace

chain_collection example_chains() {
  std::vector<chain> chains{
      {one_based({1}), {1, 2}},                      // r: adds 2,3
      {one_based({1, 2, 4, 6}), {4, 2}},             // e: adds 5,3
      {one_based({4, 5}), {0, 1}},                   // a: adds 1,2
      {one_based({1, 2, 4, 5, 6, 7, 9}), {7, 2}},    // g: adds 8,3
      {one_based({1, 2, 4, 7}), {5, 4}},             // f: adds 6,5
      {one_based({1, 4, 5, 6, 8}), {8, 1}},          // c: adds 9,2
      {one_based({4, 5, 6}), {8, 0}},                // b: adds 9,1
  };
  return chain_collection(ground_set(9), std::move(chains));
}

ordering example_ordering() {
  // 4 ≺ 6 ≺ 5 ≺ 7 ≺ 8 ≺ 9 ≺ 1 ≺ 2 ≺ 3, shifted to 0-based.
  return ordering({3, 5, 4, 6, 7, 8, 0, 1, 2});
}

tree_spec example_spec() {
  tree_spec leaf_g{g, 2, {}}, leaf_f{f, 4, {}}, leaf_c{c, 1, {}}, leaf_b{b, 0, {}};
  tree_spec node_e{e, 2, {leaf_g, leaf_f}};
  tree_spec node_a{a, 1, {leaf_c, leaf_b}};
  return {r, std::nullopt, {node_e, node_a}};
}

std::vector<example_mutation> example_mutations() {
  std::vector<example_mutation> out;
  auto add = [&](std::string name, std::string expected, const std::function<void(tree_spec &)> &edit) {
    tree_spec t = example_spec();
    edit(t);
    out.push_back({std::move(name), std::move(expected), std::move(t)});
  };
  // children[0] = e, children[1] = a
  add("swap root children", "T2", [](tree_spec &t) { std::swap(t.children[0], t.children[1]); });
  add("swap children of a", "T2", [](tree_spec &t) { std::swap(t.children[1].children[0], t.children[1].children[1]); });
  add("swap children of e", "T2", [](tree_spec &t) { std::swap(t.children[0].children[0], t.children[0].children[1]); });
  add("label r-a 2 -> 1", "T2", [](tree_spec &t) { t.children[1].label = 0; });
  add("label a-b 1 -> 9", "T2", [](tree_spec &t) { t.children[1].children[1].label = 8; });
  add("label e-g removed", "T1", [](tree_spec &t) { t.children[0].children[0].label.reset(); });
  add("c uses the chain of a", "T4", [](tree_spec &t) { t.children[1].children[0].chain = a; });
  add("f uses the chain of e", "T4", [](tree_spec &t) { t.children[0].children[1].chain = e; });
  add("children of a removed", "perfect", [](tree_spec &t) { t.children[1].children.clear(); });
  add("extra child below g", "perfect", [](tree_spec &t) {
    t.children[0].children[0].children.push_back({b, 2, {}});
  });
  return out;
}

std::string first_failure(const tree_report &r) {
  for (const char *name : {"perfect", "T1", "T2", "T3", "T4", "T5"})
    if (r.failed(name))
      return name;
  return "";
}

synthetic_tree make_synthetic_tree(const synthetic_options &opts, std::uint64_t seed) {
  seeded_rng rng(seed);
  const int H = opts.height;
  const int bmin = std::max(1, opts.branching);
  const int bmax = bmin + opts.extra_branching;
  const int h = std::max(1, (bmax - 1) * H + 1);

  // Shape: children count per vertex, breadth first.
  std::vector<std::vector<int>> kids_per_depth(H + 1);
  std::vector<int> count(H + 1, 0);
  count[0] = 1;
  for (int d = 0; d < H; ++d)
    for (int v = 0; v < count[d]; ++v) {
      int c = bmin + static_cast<int>(rng.below(static_cast<std::uint64_t>(bmax - bmin + 1)));
      kids_per_depth[d].push_back(c);
      count[d + 1] += c;
    }

  int multiplier = static_cast<int>(rng.below(2));
  auto base_len = [&](int mult) { return std::max(1, mult * opts.k * h); };
  auto distinct_budget = [&](int mult) { return (max_ground_size - h - base_len(mult)) / (h + 1) + 1; };
  if (distinct_budget(multiplier) < H + 1)
    multiplier = 0;
  int budget = distinct_budget(multiplier);
  if (budget < H + 1)
    throw std::invalid_argument("synthetic tree does not fit in 64 elements");

  // Distinct chains per depth.
  std::vector<int> distinct(H + 1, 1);
  int spare = budget - (H + 1);
  for (int d = 0; d <= H && spare > 0; ++d) {
    int more = static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min(spare, count[d] - 1) + 1)));
    distinct[d] += more;
    spare -= more;
  }

  // a-values: the deepest level gets the smallest ones.
  std::vector<std::vector<int>> a_of(H + 1);
  int cur = 0;
  for (int d = H; d >= 0; --d)
    for (int s = 0; s < distinct[d]; ++s, cur += h + 1)
      a_of[d].push_back(cur);
  const int w = a_of[0].back() + base_len(multiplier);
  const int n = w + h;

  std::vector<chain> chains;
  std::vector<std::vector<int>> chain_index(H + 1);
  for (int d = H; d >= 0; --d)
    for (int a : a_of[d]) {
      chain c;
      for (int e = a; e < w; ++e)
        c.base |= bit(e);
      for (int e = w; e < w + h; ++e)
        c.added.push_back(e);
      chain_index[d].push_back(static_cast<int>(chains.size()));
      chains.push_back(std::move(c));
    }

  // Chain slot per vertex at each depth: contiguous non-decreasing groups,
  // or arbitrary when T5 may be broken.
  std::vector<std::vector<int>> slot(H + 1);
  for (int d = 0; d <= H; ++d) {
    std::vector<int> cuts;
    for (int v = 1; v < count[d]; ++v)
      cuts.push_back(v);
    rng.shuffle(std::span<int>(cuts));
    cuts.resize(static_cast<std::size_t>(distinct[d] - 1));
    std::sort(cuts.begin(), cuts.end());
    int group = 0;
    for (int v = 0; v < count[d]; ++v) {
      while (group < static_cast<int>(cuts.size()) && cuts[group] <= v)
        ++group;
      slot[d].push_back(group);
    }
    if (!opts.monotone)
      rng.shuffle(std::span<int>(slot[d]));
  }

  // Offsets within the window; a vertex at depth d with label x needs x >= (bmax-1)(H-d).
  auto pick_labels = [&](int lo, int hi, int how_many) {
    std::vector<int> pool;
    for (int x = lo; x <= hi; ++x)
      pool.push_back(x);
    rng.shuffle(std::span<int>(pool));
    pool.resize(static_cast<std::size_t>(how_many));
    std::sort(pool.rbegin(), pool.rend());
    return pool;
  };

  // Grown depth first with placeholder chains, then assigned level by level.
  std::vector<int> kid_cursor(H + 1, 0);
  cross_support_tree tree(0);
  std::function<void(int, int, std::optional<int>)> grow = [&](int id, int d, std::optional<int> phi) {
    if (d == H)
      return;
    const int c = kids_per_depth[d][kid_cursor[d]++];
    std::vector<int> labels;
    const int floor = (bmax - 1) * (H - d - 1);
    if (!phi) {
      labels = pick_labels(floor, h - 1, c);
    } else {
      labels = pick_labels(floor, *phi - 1, c - 1);
      labels.insert(labels.begin(), *phi);
    }
    std::vector<std::pair<int, int>> made;
    for (int x : labels)
      made.emplace_back(tree.add_child(id, 0, w + x), x);
    for (auto [child, x] : made)
      grow(child, d + 1, x);
  };
  grow(tree.root(), 0, std::nullopt);

  synthetic_tree out{chain_collection(ground_set(n), std::move(chains)), ordering::identity(n), cross_support_tree(0),
                     {}, opts.k, multiplier};
  auto levels = tree.levels();
  std::vector<int> chain_for(tree.size());
  for (int d = 0; d <= H; ++d)
    for (std::size_t p = 0; p < levels[d].size(); ++p)
      chain_for[levels[d][p]] = chain_index[d][slot[d][p]];
  tree_spec spec;
  std::function<tree_spec(int)> to_spec = [&](int v) {
    tree_spec s{chain_for[v], tree.node(v).edge_label, {}};
    for (int c : tree.node(v).children)
      s.children.push_back(to_spec(c));
    return s;
  };
  out.tree = make_tree(to_spec(tree.root()));
  for (std::size_t i = 0; i < out.cc.size(); ++i)
    out.chain_ids.push_back(static_cast<int>(i));
  return out;
}

} // namespace kcf::testing
