#pragma once

#include "kcf/chains.hpp"
#include "kcf/crossing.hpp"
#include "kcf/reduce.hpp"
#include "kcf/search.hpp"
#include "kcf/tree.hpp"

#include <json.hpp>

namespace kcf {

using json = nlohmann::ordered_json;

json set_json(subset_mask a);
subset_mask set_from_json(const json &j, int n);

json to_json(const family &f);
family family_from_json(const json &j);

json to_json(const witness &w);
json to_json(const chain_decomposition &d);
json to_json(const family_flags &flags);
json to_json(const uniform_report &r);
json to_json(const reduction &r);

json to_json(const chain_collection &cc);
chain_collection chain_collection_from_json(const json &j);
json to_json(const ordering &ord);
ordering ordering_from_json(const json &j);
json to_json(const condition_report &r);
json to_json(const selection_trace &t);

/// Tree with the recomputed φ and S_v of every vertex.
json to_json(const cross_support_tree &t, const chain_collection &cc);
json to_json(const tree_report &r);
json to_json(const kcross_result &r);
json to_json(const build_trace &t);

/// Node counts and timings are left out so the output is reproducible.
json to_json(const search_result &r);
json to_json(const bound_row &row);

} // namespace kcf
