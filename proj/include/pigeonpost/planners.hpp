#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pigeonpost/demand_graph.hpp"
#include "pigeonpost/flight_plan.hpp"

namespace pigeonpost {

/// A plan together with the bookkeeping needed to judge it.
struct PlannerResult {
  FlightPlan plan;
  RoutingMode mode = RoutingMode::singlehop;
  std::string algorithm;
  std::vector<NodeId> coordinators;            // coordinator algorithm only, one per component
  std::vector<std::size_t> component_counts;   // pigeons spent inside each component
  std::size_t pigeon_count = 0;
  std::size_t lower_bound = 0;                 // max(|S|, |D|)
  bool proven_optimal = false;
  std::uint64_t expansions = 0;                // search work, exact solvers only

  /// pigeon_count / max(lower_bound, 1)
  double ratio() const;
  std::size_t ratio_denominator() const { return lower_bound == 0 ? 1 : lower_bound; }
};

/// One direct pigeon per demand. Optimal for singlehop.
PlannerResult plan_singlehop(const DemandGraph& g);

/// Per component, gather all outgoing demand at the node of highest total
/// degree (smallest id on ties) and scatter it from there. All gathering
/// flights precede all scattering flights, so the plan is valid for 2-hop.
PlannerResult plan_coordinator(const DemandGraph& g);

/// Demand-oblivious plan: per component with ascending members v1..vm,
/// fly v1->...->vm->v1->...->v(m-1), i.e. 2m-2 pigeons. Valid for multihop.
PlannerResult plan_cycle(const DemandGraph& g);

/// Coordinator node of one component: maximum in+out degree, smallest id.
NodeId choose_coordinator(const DegreeProfile& profile, const std::vector<NodeId>& component);

struct ComponentSaving {
  std::size_t sources = 0;
  std::size_t destinations = 0;
  std::size_t max_degree = 0;  // largest in+out degree in the component
  std::size_t pigeons = 0;
  // sources + destinations - pigeons; may be negative for plans that are
  // worse than gather/scatter
  std::int64_t saving = 0;
};

struct ApproximationReport {
  std::size_t pigeon_count = 0;
  std::size_t lower_bound = 0;
  std::size_t ratio_numerator = 0;
  std::size_t ratio_denominator = 1;
  double ratio = 0.0;
  std::size_t sources_plus_destinations = 0;
  // |S| + |D| - sum of per-component maximum degree. Reported for reference;
  // it is not a valid upper bound on the coordinator plan in general.
  std::int64_t nominal_bound = 0;
  bool within_two_approximation = false;  // pigeon_count <= 2 * lower_bound
  std::vector<ComponentSaving> components;
};

ApproximationReport approximation_report(const DemandGraph& g, const PlannerResult& r);

/// Fills pigeon_count, lower_bound and component_counts from the plan.
void finalize_result(const DemandGraph& g, PlannerResult& r);

}  // namespace pigeonpost
