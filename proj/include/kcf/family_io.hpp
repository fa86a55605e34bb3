#pragma once

#include "kcf/family.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kcf {

/// Malformed input file; `line()` is 1-based (0 when not tied to a line).
class parse_error : public std::runtime_error {
public:
  parse_error(const std::string &what, int line) : std::runtime_error(what), line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

struct parsed_family {
  family fam;
  std::vector<std::string> warnings;
};

// Family file: `n <int>` header, then one set per line as ascending
// comma-separated elements or `-` for the empty set; `#` lines are comments.
parsed_family parse_family(std::istream &in);
parsed_family parse_family(std::string_view text);

void serialize_family(std::ostream &out, const family &f);
std::string serialize_family(const family &f);

/// "0,1,4" or "-" for the empty set.
std::string format_set(subset_mask a);
/// Brace notation for messages: "{0,1}".
std::string brace_set(subset_mask a);

/// Parses one set token against ground size n; throws parse_error tagged with `line`.
subset_mask parse_set(std::string_view token, int n, int line);

/// Reads the `n <int>` header; skips blank and comment lines. Advances `line_no`.
int read_header(std::istream &in, int &line_no);

std::string_view trim(std::string_view s);
bool is_skippable(std::string_view line);

} // namespace kcf
