#include "kcf/proof_io.hpp"

#include "kcf/family_io.hpp"

#include <charconv>
#include <functional>
#include <istream>
#include <json.hpp>
#include <sstream>

namespace kcf {

namespace {

using json = nlohmann::ordered_json;

std::string at_line(int line) { return " at line " + std::to_string(line); }

int parse_number(std::string_view s, int line, const char *what) {
  s = trim(s);
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || p != s.data() + s.size())
    throw parse_error(std::string("bad ") + what + " '" + std::string(s) + "'" + at_line(line), line);
  return v;
}

int element(std::string_view s, int n, int base, int line) {
  int e = parse_number(s, line, "element");
  if (e < base || e >= n + base)
    throw parse_error("element " + std::to_string(e) + " outside " + std::to_string(base) + ".." +
                          std::to_string(n + base - 1) + at_line(line),
                      line);
  return e - base;
}

std::vector<int> element_list(std::string_view s, char sep, int n, int base, int line) {
  std::vector<int> out;
  s = trim(s);
  if (s == "-" || s.empty())
    return out;
  std::size_t pos = 0;
  while (true) {
    auto cut = s.find(sep, pos);
    auto piece = trim(s.substr(pos, cut == std::string_view::npos ? std::string_view::npos : cut - pos));
    if (!piece.empty() || sep != ' ')
      out.push_back(element(piece, n, base, line));
    if (cut == std::string_view::npos)
      break;
    pos = cut + 1;
  }
  return out;
}

// Returns the base from a `base <0|1>` line, or nullopt when `t` is something else.
std::optional<int> base_directive(std::string_view t, int line) {
  if (t.substr(0, 5) != "base " && t.substr(0, 5) != "base\t")
    return std::nullopt;
  int b = parse_number(t.substr(5), line, "element base");
  if (b != 0 && b != 1)
    throw parse_error("element base must be 0 or 1" + at_line(line), line);
  return b;
}

int json_int(const json &j, const char *key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw parse_error(std::string("tree node needs integer '") + key + "'", 0);
  return j[key].get<int>();
}

} // namespace

chain_collection parse_chain_collection(std::istream &in) {
  int line_no = 0;
  const int n = read_header(in, line_no);
  int base = 0;
  bool body_started = false;
  std::vector<chain> chains;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_skippable(line))
      continue;
    auto t = trim(line);
    if (auto b = base_directive(t, line_no)) {
      if (body_started)
        throw parse_error("'base' must precede the chains" + at_line(line_no), line_no);
      base = *b;
      continue;
    }
    body_started = true;
    if (t.substr(0, 6) != "chain " && t.substr(0, 6) != "chain\t")
      throw parse_error("expected 'chain <base-set>; <x1,...,xh>'" + at_line(line_no), line_no);
    auto rest = t.substr(6);
    auto semi = rest.find(';');
    if (semi == std::string_view::npos)
      throw parse_error("missing ';' between base set and additions" + at_line(line_no), line_no);
    chain c;
    auto base_part = trim(rest.substr(0, semi));
    if (base_part.empty())
      throw parse_error("empty base set (use '-')" + at_line(line_no), line_no);
    int prev = -1;
    for (int e : element_list(base_part, ',', n, base, line_no)) {
      if (e <= prev)
        throw parse_error("base elements not strictly ascending" + at_line(line_no), line_no);
      prev = e;
      c.base |= bit(e);
    }
    c.added = element_list(rest.substr(semi + 1), ',', n, base, line_no);
    chains.push_back(std::move(c));
  }
  try {
    return chain_collection(ground_set(n), std::move(chains));
  } catch (const std::invalid_argument &e) {
    throw parse_error(e.what(), 0);
  }
}

chain_collection parse_chain_collection(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_chain_collection(in);
}

std::string serialize_chain_collection(const chain_collection &cc) {
  std::ostringstream out;
  out << "n " << cc.n() << '\n';
  for (const chain &c : cc.chains()) {
    out << "chain " << format_set(c.base) << "; ";
    for (std::size_t t = 0; t < c.added.size(); ++t)
      out << (t ? "," : "") << c.added[t];
    if (c.added.empty())
      out << '-';
    out << '\n';
  }
  return out.str();
}

ordering parse_ordering(std::istream &in, int n) {
  int base = 0;
  int line_no = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_skippable(line))
      continue;
    auto t = trim(line);
    if (auto b = base_directive(t, line_no)) {
      base = *b;
      continue;
    }
    std::vector<int> greatest_first = element_list(t, ' ', n, base, line_no);
    if (static_cast<int>(greatest_first.size()) != n)
      throw parse_error("ordering lists " + std::to_string(greatest_first.size()) + " elements, expected " +
                            std::to_string(n) + at_line(line_no),
                        line_no);
    while (std::getline(in, line)) {
      ++line_no;
      if (!is_skippable(line))
        throw parse_error("ordering must be a single line" + at_line(line_no), line_no);
    }
    try {
      return ordering(std::vector<int>(greatest_first.rbegin(), greatest_first.rend()));
    } catch (const std::invalid_argument &e) {
      throw parse_error(e.what(), line_no);
    }
  }
  throw parse_error("missing ordering line", line_no);
}

ordering parse_ordering(std::string_view text, int n) {
  std::istringstream in{std::string(text)};
  return parse_ordering(in, n);
}

std::string serialize_ordering(const ordering &ord) {
  std::string out;
  const auto &least_first = ord.elements();
  for (auto it = least_first.rbegin(); it != least_first.rend(); ++it)
    out += (out.empty() ? "" : " ") + std::to_string(*it);
  return out + '\n';
}

cross_support_tree parse_tree(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error &e) {
    throw parse_error(std::string("tree is not valid JSON: ") + e.what(), 0);
  }
  int base = 0;
  const json *root = &doc;
  if (doc.is_object() && doc.contains("root")) {
    base = doc.value("base", 0);
    if (base != 0 && base != 1)
      throw parse_error("element base must be 0 or 1", 0);
    root = &doc["root"];
  }
  if (!root->is_object())
    throw parse_error("tree root must be an object", 0);
  if (root->contains("edge_label_from_parent") && !(*root)["edge_label_from_parent"].is_null())
    throw parse_error("the root has no parent edge", 0);

  cross_support_tree t(json_int(*root, "chain"));
  std::function<void(const json &, int)> add = [&](const json &node, int id) {
    if (!node.contains("children"))
      return;
    if (!node["children"].is_array())
      throw parse_error("'children' must be an array", 0);
    for (const json &child : node["children"]) {
      if (!child.is_object())
        throw parse_error("tree node must be an object", 0);
      std::optional<int> label;
      if (child.contains("edge_label_from_parent") && !child["edge_label_from_parent"].is_null())
        label = json_int(child, "edge_label_from_parent") - base;
      add(child, t.add_child(id, json_int(child, "chain"), label));
    }
  };
  add(*root, t.root());
  return t;
}

namespace {

json node_json(const cross_support_tree &t, int v) {
  json j;
  j["chain"] = t.node(v).chain;
  j["edge_label_from_parent"] = t.node(v).edge_label ? json(*t.node(v).edge_label) : json(nullptr);
  j["children"] = json::array();
  for (int c : t.node(v).children)
    j["children"].push_back(node_json(t, c));
  return j;
}

} // namespace

std::string serialize_tree(const cross_support_tree &t) { return node_json(t, t.root()).dump(2) + '\n'; }

} // namespace kcf
