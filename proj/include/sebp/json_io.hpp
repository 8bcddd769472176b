#pragma once

#include <filesystem>
#include <json.hpp>

#include "sebp/bounds.hpp"
#include "sebp/cost.hpp"
#include "sebp/distribution.hpp"
#include "sebp/instance.hpp"
#include "sebp/policies.hpp"

namespace sebp {

using Json = nlohmann::ordered_json;

// Distribution: {"kind": "...", ...parameters}. Finite laws carry "points": [[value, prob], ...].
Json to_json(const Distribution& d);
Distribution distribution_from_json(const Json& j);

// Instance: {"machines": m, "jobs": [distribution, ...]}.
Json to_json(const Instance& inst);
Instance instance_from_json(const Json& j);

/// Machines are numbered from 1 in JSON.
Json to_json(const Assignment& asg);
Json to_json(const CostEstimate& est);
Json to_json(const BoundReport& rep);

/// All malformed input is reported as InvalidArgument.
Instance read_instance(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const Json& j);

}  // namespace sebp
