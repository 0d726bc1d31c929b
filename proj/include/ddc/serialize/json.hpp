#pragma once

#include <json.hpp>

#include "ddc/cluster/local_model.hpp"
#include "ddc/geom/types.hpp"
#include "ddc/merge/merge.hpp"
#include "ddc/runtime/scenario.hpp"

namespace ddc::serialize {

using nlohmann::json;

// All readers throw ConfigError on malformed input.

/// {"rings": [[[x, y], ...], ...]}
json to_json(const geom::Contour& c);
geom::Contour contour_from_json(const json& j);

/// {"node_id", "n", "noise", "clusters": [{"id", "count", "contour"}]}
json to_json(const cluster::LocalModel& m);
cluster::LocalModel local_model_from_json(const json& j);

/// {"clusters": [{"gid", "contour", "provenance": [[node, cid], ...]}]}
json to_json(const merge::GlobalModel& g);
merge::GlobalModel global_model_from_json(const json& j);

/// Phase-2 message body: [{"contour", "provenance"}, ...]
json to_json(const merge::ContourSet& s);
merge::ContourSet contour_set_from_json(const json& j);

json to_json(const runtime::CostModel& c);
json to_json(const runtime::ScenarioConfig& c);
runtime::ScenarioConfig scenario_from_json(const json& j);

/// Reads and parses a JSON file; ConfigError when missing or malformed.
json read_json_file(const std::string& path);

}  // namespace ddc::serialize
