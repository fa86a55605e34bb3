#include "kcf/report_json.hpp"

#include <stdexcept>

namespace kcf {

json set_json(subset_mask a) { return json(elements_of(a)); }

subset_mask set_from_json(const json &j, int n) {
  if (!j.is_array())
    throw std::invalid_argument("a set must be a JSON array of elements");
  subset_mask m = 0;
  for (const json &e : j) {
    int x = e.get<int>();
    if (x < 0 || x >= n)
      throw std::invalid_argument("element " + std::to_string(x) + " outside the ground set");
    m |= bit(x);
  }
  return m;
}

namespace {

json sets_json(std::span<const subset_mask> sets) {
  json out = json::array();
  for (subset_mask a : sets)
    out.push_back(set_json(a));
  return out;
}

json pairs_json(const std::vector<std::pair<int, std::vector<int>>> &pairs) {
  json out = json::array();
  for (const auto &[x, list] : pairs)
    out.push_back({{"x", x}, {"chains", list}});
  return out;
}

json optional_int(const std::optional<int> &v) { return v ? json(*v) : json(nullptr); }

json node_json(const cross_support_tree &t, const chain_collection &cc, int v) {
  json j;
  j["chain"] = t.node(v).chain;
  j["edge_label_from_parent"] = optional_int(t.node(v).edge_label);
  j["phi"] = optional_int(t.phi(v));
  auto s = t.node(v).chain >= 0 && static_cast<std::size_t>(t.node(v).chain) < cc.size() ? t.support_set(v, cc)
                                                                                         : std::nullopt;
  j["S"] = s ? set_json(*s) : json(nullptr);
  j["children"] = json::array();
  for (int c : t.node(v).children)
    j["children"].push_back(node_json(t, cc, c));
  return j;
}

} // namespace

json to_json(const family &f) { return {{"n", f.n()}, {"size", f.size()}, {"sets", sets_json(f.sets())}}; }

family family_from_json(const json &j) {
  const int n = j.at("n").get<int>();
  std::vector<subset_mask> sets;
  for (const json &s : j.at("sets"))
    sets.push_back(set_from_json(s, n));
  return family(ground_set(n), std::move(sets));
}

json to_json(const witness &w) {
  return {{"mode", to_string(w.mode())}, {"indices", w.indices()}, {"sets", sets_json(w.sets())}};
}

json to_json(const chain_decomposition &d) {
  json chains = json::array();
  for (const auto &c : d.chains)
    chains.push_back(sets_json(c));
  return {{"chain_count", d.chains.size()}, {"chains", chains}, {"max_antichain", sets_json(d.max_antichain)}};
}

json to_json(const family_flags &flags) {
  return {{"chain", flags.is_chain},
          {"continuous_chain", flags.is_continuous_chain},
          {"antichain", flags.is_antichain},
          {"intersecting", flags.is_intersecting},
          {"laminar", flags.is_laminar}};
}

json to_json(const uniform_report &r) {
  json j{{"uniform", r.is_uniform}, {"level", r.is_uniform ? json(r.level) : json(nullptr)}};
  j["bound"] = r.bound ? json{{"num", r.bound->num}, {"den", r.bound->den}} : json(nullptr);
  j["size"] = r.size;
  j["violates"] = r.violates;
  return j;
}

json to_json(const reduction &r) {
  return {{"element", r.element}, {"complemented", r.complemented}, {"family", to_json(r.result)}};
}

json to_json(const chain_collection &cc) {
  json chains = json::array();
  for (const chain &c : cc.chains())
    chains.push_back({{"base", set_json(c.base)}, {"added", c.added}});
  return {{"n", cc.n()}, {"chains", chains}};
}

chain_collection chain_collection_from_json(const json &j) {
  const int n = j.at("n").get<int>();
  std::vector<chain> chains;
  for (const json &c : j.at("chains"))
    chains.push_back({set_from_json(c.at("base"), n), c.at("added").get<std::vector<int>>()});
  return chain_collection(ground_set(n), std::move(chains));
}

json to_json(const ordering &ord) {
  std::vector<int> greatest_first(ord.elements().rbegin(), ord.elements().rend());
  return {{"greatest_first", greatest_first}};
}

ordering ordering_from_json(const json &j) {
  auto greatest_first = j.at("greatest_first").get<std::vector<int>>();
  return ordering(std::vector<int>(greatest_first.rbegin(), greatest_first.rend()));
}

json to_json(const condition_report &r) {
  json v = json::array();
  for (const auto &x : r.violations) {
    json e{{"condition", x.condition}, {"i", x.i}};
    if (x.j >= 0)
      e["j"] = x.j;
    if (x.x >= 0)
      e["x"] = x.x;
    if (x.y >= 0)
      e["y"] = x.y;
    e["detail"] = x.detail;
    v.push_back(e);
  }
  return {{"C1", r.c1}, {"C2", r.c2}, {"C3", r.c3}, {"C4", r.c4},
          {"threshold", r.threshold}, {"all_pass", r.all_pass()}, {"violations", v}};
}

json to_json(const selection_trace &t) {
  json choices = json::array();
  for (const auto &c : t.choices)
    choices.push_back(
        {{"x", c.element}, {"chain_count", c.chain_count}, {"chosen", c.chosen}, {"kept", sets_json(c.kept)}});
  return {{"choices", choices},
          {"I0", t.i0},
          {"I1", t.i1},
          {"I2", t.i2},
          {"I3", t.i3},
          {"I", t.selected},
          {"conflict_graph",
           {{"vertices", t.conflicts.vertices},
            {"edges", t.conflicts.edges},
            {"max_degree", t.conflicts.max_degree},
            {"average_degree", t.conflicts.average_degree}}}};
}

json to_json(const cross_support_tree &t, const chain_collection &cc) { return node_json(t, cc, t.root()); }

json to_json(const tree_report &r) {
  json checks = json::object();
  for (const char *name : {"perfect", "T1", "T2", "T3", "T4", "T5", "T6", "T7", "T8"})
    checks[name] = !r.failed(name);
  json violations = json::array();
  for (const auto &v : r.violations) {
    json e{{"check", v.check}, {"node", v.node}};
    if (v.other >= 0)
      e["other"] = v.other;
    e["detail"] = v.detail;
    violations.push_back(e);
  }
  return {{"malformed", r.malformed},
          {"valid", r.valid()},
          {"derived_ok", r.derived_ok()},
          {"checks", checks},
          {"violations", violations}};
}

json to_json(const kcross_result &r) {
  return {{"path", r.path}, {"labels", r.labels}, {"sets", sets_json(r.sets)}};
}

json to_json(const build_trace &t) {
  json levels = json::array();
  for (const auto &l : t.levels)
    levels.push_back({{"level", l.level}, {"roots", l.roots}, {"pools", pairs_json(l.pools)}, {"tops", pairs_json(l.tops)}});
  json roots = json::array();
  for (const auto &r : t.roots) {
    json reps = json::array();
    for (const auto &[x, j] : r.representatives)
      reps.push_back({{"x", x}, {"chain", j}});
    roots.push_back(
        {{"level", r.level}, {"root", r.root}, {"Y", r.y}, {"Z", r.z}, {"representatives", reps}, {"Q", r.q}});
  }
  return {{"levels", levels}, {"roots", roots}};
}

json to_json(const search_result &r) {
  return {{"size", r.size}, {"proven_optimal", r.proven_optimal}, {"best", to_json(r.best)}};
}

json to_json(const bound_row &row) {
  return {{"n", row.n},
          {"k", row.k},
          {"universe", to_string(row.universe)},
          {"mode", to_string(row.mode)},
          {"exact", row.exact},
          {"proven_optimal", row.proven_optimal},
          {"formula", row.formula ? json(*row.formula) : json(nullptr)},
          {"formula_name", row.formula_name},
          {"tight", row.tight ? json(*row.tight) : json("N/A")}};
}

} // namespace kcf
