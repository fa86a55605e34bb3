#pragma once

#include "kcf/crossing.hpp"
#include "kcf/family.hpp"

#include <stdexcept>

namespace kcf {

/// Input to weak_reduce that is not k-cross-free; carries the offending members.
class not_cross_free_error : public std::invalid_argument {
public:
  not_cross_free_error(const std::string &what, witness w) : std::invalid_argument(what), witness_(std::move(w)) {}
  const kcf::witness &found() const { return witness_; }

private:
  kcf::witness witness_;
};

struct reduction {
  family result;
  int element = -1;        // the x whose absence every member of the result shares
  bool complemented = false; // true when the result is {X\A : x ∈ A ∈ F}
};

/// From a k-cross-free family, a weakly-k-cross-free one of at least half the size.
/// Every member of the output avoids one element x; x maximises the output size,
/// preferring the sets avoiding x over the complements, then the smallest x.
reduction weak_reduce(const family &f, int k);

} // namespace kcf
