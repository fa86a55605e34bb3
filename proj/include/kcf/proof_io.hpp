#pragma once

#include "kcf/chains.hpp"
#include "kcf/tree.hpp"

#include <iosfwd>
#include <string>
#include <string_view>

namespace kcf {

// Chain file: `n <int>`, an optional `base <0|1>` line naming the number of the
// first element, then one `chain <base-set>; <x1,...,xh>` line per chain.
chain_collection parse_chain_collection(std::istream &in);
chain_collection parse_chain_collection(std::string_view text);
std::string serialize_chain_collection(const chain_collection &cc);

// Ordering file: an optional `base <0|1>` line, then one line listing every
// element from the ≺-greatest down to the ≺-least.
ordering parse_ordering(std::istream &in, int n);
ordering parse_ordering(std::string_view text, int n);
std::string serialize_ordering(const ordering &ord);

// Tree file: nested `{"chain": i, "edge_label_from_parent": x|null, "children": [...]}`,
// optionally wrapped as `{"base": 1, "root": {...}}` for 1-based element labels.
cross_support_tree parse_tree(std::string_view text);
std::string serialize_tree(const cross_support_tree &t);

} // namespace kcf
