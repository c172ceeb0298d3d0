#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pigeonpost/demand_graph.hpp"
#include "pigeonpost/planners.hpp"

namespace pigeonpost {

struct SearchLimits {
  std::size_t max_nodes = 10;         // per component (multihop) / active nodes (2-hop)
  std::size_t max_demands = 64;
  std::size_t max_walk_length = 0;    // 0: use the 2m-2 bound of the cycle plan
  double time_budget_seconds = 60.0;
  std::uint64_t node_budget = 200'000'000;

  void validate() const;
};

/// Partial walk through one component. `satisfied` holds indices into the
/// component's demand list.
struct WalkState {
  NodeId current = 0;
  std::vector<bool> appeared;
  std::vector<bool> satisfied;
};

/// Appends `next` to the walk summarised by `state`: every demand (u, next)
/// with u already in the walk becomes satisfied.
WalkState extend_walk(const DemandGraph& component, const WalkState& state, NodeId next);

/// Flights along consecutive walk positions.
FlightPlan walk_to_plan(const std::vector<NodeId>& walk);

/// Minimum multihop plan. Components are solved independently; each one is a
/// shortest covering walk found by breadth-first search. Components that
/// exceed the limits, or a search that runs out of budget, fall back to the
/// cheaper of the coordinator and cycle plans and clear proven_optimal.
PlannerResult optimal_multihop(const DemandGraph& g, const SearchLimits& limits = {});

/// Minimum 2-hop plan by iterative deepening over ordered flight sequences,
/// starting at the lower bound and stopping below the coordinator plan's
/// count. Falls back to the coordinator plan when the search is not
/// affordable.
PlannerResult optimal_twohop(const DemandGraph& g, const SearchLimits& limits = {});

struct Certificate {
  bool valid = false;
  RoutingMode mode = RoutingMode::multihop;
  std::size_t pigeon_count = 0;
  std::size_t lower_bound = 0;  // component-wise max(|S_c|, |D_c|) summed
  bool tight = false;           // pigeon_count == lower_bound
  bool proven_optimal = false;
  std::string reason;           // empty when valid
};

/// Independent re-check of a solver result: the plan must pass the verifier
/// of its mode and respect the component-wise lower bound.
Certificate certify(const DemandGraph& g, const PlannerResult& r);

}  // namespace pigeonpost
