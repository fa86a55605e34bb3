#include "kcf/family_io.hpp"

#include <charconv>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace kcf {

std::string_view trim(std::string_view s) {
  const char *ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos)
    return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

bool is_skippable(std::string_view line) {
  auto t = trim(line);
  return t.empty() || t.front() == '#';
}

namespace {

int parse_int(std::string_view tok, int line, const char *what) {
  tok = trim(tok);
  int v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc{} || p != tok.data() + tok.size())
    throw parse_error(std::string("malformed ") + what + " '" + std::string(tok) + "' at line " +
                          std::to_string(line),
                      line);
  return v;
}

} // namespace

subset_mask parse_set(std::string_view token, int n, int line) {
  token = trim(token);
  if (token == "-")
    return 0;
  if (token.empty())
    throw parse_error("empty set token at line " + std::to_string(line) + " (use '-' for the empty set)", line);
  subset_mask m = 0;
  int prev = -1;
  std::size_t pos = 0;
  while (pos <= token.size()) {
    auto comma = token.find(',', pos);
    auto piece = token.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    int e = parse_int(piece, line, "element");
    if (e < 0)
      throw parse_error("negative element " + std::to_string(e) + " at line " + std::to_string(line), line);
    if (e >= n)
      throw parse_error("element " + std::to_string(e) + " ≥ n=" + std::to_string(n) + " at line " +
                            std::to_string(line),
                        line);
    if (e <= prev)
      throw parse_error("elements not strictly ascending at line " + std::to_string(line), line);
    prev = e;
    m |= bit(e);
    if (comma == std::string_view::npos)
      break;
    pos = comma + 1;
  }
  return m;
}

int read_header(std::istream &in, int &line_no) {
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_skippable(line))
      continue;
    auto t = trim(line);
    if (t.size() < 2 || t[0] != 'n' || (t[1] != ' ' && t[1] != '\t'))
      throw parse_error("expected header 'n <int>' at line " + std::to_string(line_no), line_no);
    int n = parse_int(t.substr(2), line_no, "ground size");
    if (n < 1 || n > max_ground_size)
      throw parse_error("n=" + std::to_string(n) + " outside [1,64] at line " + std::to_string(line_no), line_no);
    return n;
  }
  throw parse_error("missing header 'n <int>'", line_no);
}

parsed_family parse_family(std::istream &in) {
  int line_no = 0;
  int n = read_header(in, line_no);
  std::vector<subset_mask> sets;
  std::vector<std::string> warnings;
  std::map<subset_mask, int> first_seen;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_skippable(line))
      continue;
    subset_mask m = parse_set(line, n, line_no);
    auto [it, fresh] = first_seen.emplace(m, line_no);
    if (!fresh) {
      warnings.push_back("duplicate set " + brace_set(m) + " at line " + std::to_string(line_no) +
                         " (first at line " + std::to_string(it->second) + ") merged");
      continue;
    }
    sets.push_back(m);
  }
  return {family(ground_set(n), std::move(sets)), std::move(warnings)};
}

parsed_family parse_family(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_family(in);
}

std::string format_set(subset_mask a) {
  if (a == 0)
    return "-";
  std::string out;
  for (int e : elements_of(a)) {
    if (!out.empty())
      out += ',';
    out += std::to_string(e);
  }
  return out;
}

std::string brace_set(subset_mask a) { return "{" + (a == 0 ? std::string() : format_set(a)) + "}"; }

void serialize_family(std::ostream &out, const family &f) {
  out << "n " << f.n() << '\n';
  for (subset_mask a : f)
    out << format_set(a) << '\n';
}

std::string serialize_family(const family &f) {
  std::ostringstream out;
  serialize_family(out, f);
  return out.str();
}

} // namespace kcf
