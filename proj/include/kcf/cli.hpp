#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kcf::cli {

enum exit_code : int { ok = 0, property_fails = 1, usage_error = 2 };

/// Runs one invocation; `args` excludes the program name. Input paths given
/// as "-" are read from `in`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err, std::istream &in);
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace kcf::cli
