#pragma once

#include <string>

#include <json.hpp>

#include "pigeonpost/demand_graph.hpp"
#include "pigeonpost/exact.hpp"
#include "pigeonpost/flight_plan.hpp"
#include "pigeonpost/planners.hpp"
#include "pigeonpost/reductions.hpp"

// Canonical JSON: object keys sorted (nlohmann's default map), demand lists
// in graph order, which is sorted.
namespace pigeonpost::json {

using nlohmann::json;

json to_json(const DemandGraph& g);
json to_json(const FlightPlan& plan);
json to_json(const VerificationReport& report);
json to_json(const ApproximationReport& report);
json to_json(const Certificate& cert);
json to_json(const UndirectedGraph& g);

/// Result with a top-level "flights" array, so it can be read back as a plan.
json to_json(const PlannerResult& r);

/// Bounds summary: degree profile, components and lower bounds.
json bounds_json(const DemandGraph& g);

/// Reduction with top-level "n" and "demands", so it can be read back as a
/// demand graph.
json to_json(const ReductionOutput& r, const std::string& kind);

/// Two-space indented text with a trailing newline.
std::string dump(const json& j);

}  // namespace pigeonpost::json
