#include "kcf/tree.hpp"

#include "kcf/family_io.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace kcf {

cross_support_tree::cross_support_tree(int root_chain) { nodes_.push_back(tree_node{root_chain, std::nullopt, {}, -1, 0}); }

int cross_support_tree::add_child(int parent, int chain, std::optional<int> label) {
  int id = static_cast<int>(nodes_.size());
  nodes_.push_back(tree_node{chain, label, {}, parent, nodes_[parent].depth + 1});
  nodes_[parent].children.push_back(id);
  return id;
}

cross_support_tree cross_support_tree::subtree(int v) const {
  cross_support_tree sub(nodes_[v].chain);
  std::function<void(int, int)> copy = [&](int dst, int src) {
    for (int c : nodes_[src].children)
      copy(sub.add_child(dst, nodes_[c].chain, nodes_[c].edge_label), c);
  };
  copy(sub.root(), v);
  return sub;
}

int cross_support_tree::graft(int parent, const cross_support_tree &sub, std::optional<int> label) {
  std::function<int(int, int, std::optional<int>)> copy = [&](int at, int src, std::optional<int> lab) {
    int id = add_child(at, sub.nodes_[src].chain, lab);
    for (int c : sub.nodes_[src].children)
      copy(id, c, sub.nodes_[c].edge_label);
    return id;
  };
  return copy(parent, sub.root(), label);
}

int cross_support_tree::height() const {
  int h = 0;
  for (const auto &nd : nodes_)
    h = std::max(h, nd.depth);
  return h;
}

bool cross_support_tree::is_perfect() const {
  const int h = height();
  for (const auto &nd : nodes_)
    if (nd.children.empty() && nd.depth != h)
      return false;
  return true;
}

std::vector<std::vector<int>> cross_support_tree::levels() const {
  std::vector<std::vector<int>> out{{root()}};
  while (true) {
    std::vector<int> next;
    for (int v : out.back())
      for (int c : nodes_[v].children)
        next.push_back(c);
    if (next.empty())
      break;
    out.push_back(std::move(next));
  }
  return out;
}

bool cross_support_tree::is_leftmost_in(int u, int v) const {
  while (u != v) {
    int p = nodes_[u].parent;
    if (p < 0 || nodes_[p].children.front() != u)
      return false;
    u = p;
  }
  return true;
}

int cross_support_tree::ancestor_at_depth(int u, int depth) const {
  while (nodes_[u].depth > depth)
    u = nodes_[u].parent;
  return u;
}

std::optional<int> cross_support_tree::phi(int v) const {
  if (v == root())
    return std::nullopt;
  return nodes_[v].edge_label;
}

std::optional<subset_mask> cross_support_tree::support_set(int v, const chain_collection &cc) const {
  auto x = phi(v);
  int c = nodes_[v].chain;
  if (!x || c < 0 || static_cast<std::size_t>(c) >= cc.size() || *x < 0 || *x >= cc.n() || !cc[c].in_support(*x))
    return std::nullopt;
  return cc[c].below(*x);
}

bool operator==(const cross_support_tree &a, const cross_support_tree &b) {
  std::function<bool(int, int)> same = [&](int u, int v) {
    const auto &nu = a.nodes_[u];
    const auto &nv = b.nodes_[v];
    if (nu.chain != nv.chain || nu.edge_label != nv.edge_label || nu.children.size() != nv.children.size())
      return false;
    for (std::size_t i = 0; i < nu.children.size(); ++i)
      if (!same(nu.children[i], nv.children[i]))
        return false;
    return true;
  };
  return same(a.root(), b.root());
}

bool tree_report::failed(const std::string &check) const {
  return std::any_of(violations.begin(), violations.end(), [&](const auto &v) { return v.check == check; });
}

bool tree_report::valid() const {
  if (is_malformed())
    return false;
  for (const char *c : {"perfect", "T1", "T2", "T3", "T4", "T5"})
    if (failed(c))
      return false;
  return true;
}

bool tree_report::t1_to_t4() const {
  if (is_malformed())
    return false;
  for (const char *c : {"perfect", "T1", "T2", "T3", "T4"})
    if (failed(c))
      return false;
  return true;
}

bool tree_report::derived_ok() const { return !failed("T6") && !failed("T7") && !failed("T8"); }

std::vector<std::string> tree_report::failed_checks() const {
  std::vector<std::string> out;
  for (const char *c : {"perfect", "T1", "T2", "T3", "T4", "T5", "T6", "T7", "T8"})
    if (failed(c))
      out.emplace_back(c);
  return out;
}

tree_report validate_tree(const cross_support_tree &t, const chain_collection &cc, const ordering &ord,
                          const std::vector<int> *allowed) {
  tree_report r;
  const int n = cc.n();
  const int count = static_cast<int>(t.size());
  if (ord.size() != n)
    r.malformed.push_back("ordering covers " + std::to_string(ord.size()) + " elements, ground set has " +
                          std::to_string(n));
  for (int v = 0; v < count; ++v) {
    int c = t.node(v).chain;
    if (c < 0 || static_cast<std::size_t>(c) >= cc.size())
      r.malformed.push_back("node " + std::to_string(v) + " refers to missing chain " + std::to_string(c));
  }
  if (r.is_malformed())
    return r;

  auto violate = [&](const char *check, int node, int other, std::string detail) {
    r.violations.push_back({check, node, other, std::move(detail)});
  };
  auto label_ok = [&](std::optional<int> l) { return l && *l >= 0 && *l < n; };
  auto chain_of = [&](int v) -> const chain & { return cc[t.node(v).chain]; };

  if (!t.is_perfect())
    violate("perfect", -1, -1, "root-to-leaf paths differ in length");

  // T1: vertices drawn from the index set, every edge labelled by a ground element.
  for (int v = 0; v < count; ++v) {
    if (allowed && std::find(allowed->begin(), allowed->end(), t.node(v).chain) == allowed->end())
      violate("T1", v, -1, "chain " + std::to_string(t.node(v).chain) + " not in the index set");
    if (v != t.root() && !label_ok(t.node(v).edge_label))
      violate("T1", v, -1, "edge from parent lacks a valid label");
  }

  // T2: incident labels lie in the support; child labels ≻-decrease left to right.
  for (int v = 0; v < count; ++v) {
    const chain &cv = chain_of(v);
    const auto &nd = t.node(v);
    if (v != t.root() && label_ok(nd.edge_label) && !cv.in_support(*nd.edge_label))
      violate("T2", v, nd.parent, "parent edge label " + std::to_string(*nd.edge_label) + " not in X_v");
    for (std::size_t a = 0; a < nd.children.size(); ++a) {
      const auto &lab = t.node(nd.children[a]).edge_label;
      if (label_ok(lab) && !cv.in_support(*lab))
        violate("T2", v, nd.children[a], "child edge label " + std::to_string(*lab) + " not in X_v");
      if (a == 0)
        continue;
      const auto &prev = t.node(nd.children[a - 1]).edge_label;
      if (label_ok(lab) && label_ok(prev) && !ord.precedes(*lab, *prev))
        violate("T2", v, nd.children[a], "child labels not ≻-decreasing left to right");
    }
  }

  // T3: a non-root non-leaf repeats its parent label on its leftmost child edge.
  for (int v = 1; v < count; ++v) {
    if (t.is_leaf(v))
      continue;
    if (t.node(v).edge_label != t.node(t.node(v).children.front()).edge_label)
      violate("T3", v, t.node(v).children.front(), "leftmost child label differs from parent label");
  }

  // T4: C_v(x) ⊊ C_u(x) along every edge vu labelled x.
  for (int u = 1; u < count; ++u) {
    const auto &lab = t.node(u).edge_label;
    int v = t.node(u).parent;
    if (!label_ok(lab) || !chain_of(v).in_support(*lab) || !chain_of(u).in_support(*lab))
      continue;
    if (!is_proper_subset(chain_of(v).below(*lab), chain_of(u).below(*lab)))
      violate("T4", v, u, "C_v(x) not a proper subset of C_u(x) for x=" + std::to_string(*lab));
  }

  auto levels = t.levels();
  std::vector<std::optional<subset_mask>> s(count);
  for (int v = 1; v < count; ++v)
    s[v] = t.support_set(v, cc);

  // T5: same-depth pairs, where u is leftmost below the child of the common
  // ancestor that leads to it.
  for (std::size_t d = 1; d < levels.size(); ++d) {
    const auto &row = levels[d];
    for (std::size_t p = 0; p < row.size(); ++p)
      for (std::size_t q = p + 1; q < row.size(); ++q) {
        int u = row[p], w = row[q];
        int a = u, b = w;
        while (t.node(a).parent != t.node(b).parent) {
          a = t.node(a).parent;
          b = t.node(b).parent;
        }
        if (!t.is_leftmost_in(u, a) || !s[u] || !s[w])
          continue;
        if (!is_subset(*s[w], *s[u]))
          violate("T5", u, w, brace_set(*s[w]) + " ⊄ " + brace_set(*s[u]));
      }
  }

  // T6: leftmost descendants share φ and their S sets strictly grow.
  for (int v = 1; v < count; ++v) {
    auto x = t.phi(v);
    if (!s[v] || !x)
      continue;
    int p = t.node(v).parent;
    if (chain_of(p).in_support(*x) && !is_proper_subset(chain_of(p).below(*x), *s[v]))
      violate("T6", p, v, "C_p(x) not a proper subset of S_v");
    for (int u = v; !t.is_leaf(u);) {
      u = t.node(u).children.front();
      if (t.phi(u) != x)
        violate("T6", v, u, "leftmost descendant has a different φ");
      else if (s[u] && !is_proper_subset(*s[v], *s[u]))
        violate("T6", v, u, "S_v not a proper subset of S_u");
    }
  }

  // T7: members of any two vertex chains meet; the bases are the smallest members.
  std::map<int, int> first_use;
  for (int v = 0; v < count; ++v)
    first_use.emplace(t.node(v).chain, v);
  for (auto [a, va] : first_use)
    for (auto [b, vb] : first_use)
      if (a <= b && (cc[a].base & cc[b].base) == 0)
        violate("T7", va, vb, "chains " + std::to_string(a) + " and " + std::to_string(b) + " have disjoint members");

  // T8: S strictly grows in size from ancestor to descendant.
  for (int u = 1; u < count; ++u)
    for (int v = t.node(u).parent; v > 0; v = t.node(v).parent)
      if (s[u] && s[v] && cardinality(*s[v]) >= cardinality(*s[u]))
        violate("T8", v, u, "|S_v| >= |S_u| for ancestor v");

  return r;
}

cross_support_tree prune_root_children(const cross_support_tree &t, const std::vector<int> &keep) {
  if (keep.empty())
    throw precondition_error("prune needs at least one root child to keep");
  const auto &kids = t.node(t.root()).children;
  std::vector<int> positions = keep;
  std::sort(positions.begin(), positions.end());
  positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
  cross_support_tree out(t.node(t.root()).chain);
  for (int pos : positions) {
    if (pos < 0 || static_cast<std::size_t>(pos) >= kids.size())
      throw precondition_error("root child position " + std::to_string(pos) + " out of range");
    out.graft(out.root(), t.subtree(kids[pos]), t.node(kids[pos]).edge_label);
  }
  return out;
}

kcross_result extract_k_crossing_from_tree(const cross_support_tree &t, const chain_collection &cc,
                                           const ordering &ord, int k) {
  if (k < 2)
    throw precondition_error("k must be at least 2");
  if (t.height() != k)
    throw precondition_error("tree height " + std::to_string(t.height()) + " differs from k=" + std::to_string(k));
  for (std::size_t v = 0; v < t.size(); ++v)
    if (!t.is_leaf(static_cast<int>(v)) && t.node(static_cast<int>(v)).children.size() < static_cast<std::size_t>(k))
      throw precondition_error("node " + std::to_string(v) + " has fewer than k children");
  auto report = validate_tree(t, cc, ord);
  if (!report.valid())
    throw precondition_error("tree is not a cross-support tree");

  kcross_result out;
  int v = t.root();
  for (int i = 1; i <= k; ++i) {
    const auto &kids = t.node(v).children;
    int pick = -1;
    for (std::size_t pos = 1; pos < kids.size() && pick < 0; ++pos) {
      int lab = *t.phi(kids[pos]);
      if (std::find(out.labels.begin(), out.labels.end(), lab) == out.labels.end())
        pick = kids[pos];
    }
    if (pick < 0)
      throw std::logic_error("no admissible child at depth " + std::to_string(i));
    out.path.push_back(pick);
    out.labels.push_back(*t.phi(pick));
    out.sets.push_back(*t.support_set(pick, cc) | bit(*t.phi(pick)));
    v = pick;
  }
  for (std::size_t a = 0; a < out.sets.size(); ++a)
    for (std::size_t b = a + 1; b < out.sets.size(); ++b)
      if (!crosses(out.sets[a], out.sets[b], cc.ground(), crossing_mode::weak))
        throw std::logic_error("extracted sets " + brace_set(out.sets[a]) + " and " + brace_set(out.sets[b]) +
                               " do not weakly cross");
  return out;
}

} // namespace kcf
