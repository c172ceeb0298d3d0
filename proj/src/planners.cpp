#include "pigeonpost/planners.hpp"

#include <algorithm>

namespace pigeonpost {

double PlannerResult::ratio() const {
  return static_cast<double>(pigeon_count) / static_cast<double>(ratio_denominator());
}

void finalize_result(const DemandGraph& g, PlannerResult& r) {
  const ComponentPartition part = weakly_connected_components(g);
  r.pigeon_count = r.plan.size();
  r.lower_bound = lower_bound(g).global;
  r.component_counts.assign(part.size(), 0);
  for (const Flight& f : r.plan.flights()) {
    const std::size_t c = part.component_of[f.remote];
    if (c != ComponentPartition::kIsolated) ++r.component_counts[c];
  }
}

PlannerResult plan_singlehop(const DemandGraph& g) {
  PlannerResult r;
  r.mode = RoutingMode::singlehop;
  r.algorithm = "direct";
  for (const Demand& d : g.demands()) r.plan.push_back({d.src, d.dst});
  r.proven_optimal = true;
  finalize_result(g, r);
  return r;
}

NodeId choose_coordinator(const DegreeProfile& profile, const std::vector<NodeId>& component) {
  NodeId best = component.front();
  for (NodeId v : component) {
    if (profile.total_degree(v) > profile.total_degree(best)) best = v;
  }
  return best;
}

PlannerResult plan_coordinator(const DemandGraph& g) {
  const DegreeProfile profile = degree_profile(g);
  const ComponentPartition part = weakly_connected_components(g);

  PlannerResult r;
  r.mode = RoutingMode::twohop;
  r.algorithm = "coordinator";
  std::vector<Flight> scatter;
  for (const auto& component : part.components) {
    const NodeId hub = choose_coordinator(profile, component);
    r.coordinators.push_back(hub);
    for (NodeId v : component) {
      if (v == hub) continue;
      if (profile.out_degree[v] > 0) r.plan.push_back({v, hub});
      if (profile.in_degree[v] > 0) scatter.push_back({hub, v});
    }
  }
  for (const Flight& f : scatter) r.plan.push_back(f);
  finalize_result(g, r);
  return r;
}

PlannerResult plan_cycle(const DemandGraph& g) {
  const ComponentPartition part = weakly_connected_components(g);
  PlannerResult r;
  r.mode = RoutingMode::multihop;
  r.algorithm = "cycle";
  for (const auto& nodes : part.components) {
    const std::size_t m = nodes.size();
    for (std::size_t k = 0; k + 1 < m; ++k) r.plan.push_back({nodes[k], nodes[k + 1]});
    r.plan.push_back({nodes[m - 1], nodes[0]});
    for (std::size_t k = 0; k + 2 < m; ++k) r.plan.push_back({nodes[k], nodes[k + 1]});
  }
  finalize_result(g, r);
  return r;
}

ApproximationReport approximation_report(const DemandGraph& g, const PlannerResult& r) {
  const DegreeProfile profile = degree_profile(g);
  const ComponentPartition part = weakly_connected_components(g);

  ApproximationReport rep;
  rep.pigeon_count = r.plan.size();
  rep.lower_bound = lower_bound(g).global;
  rep.ratio_numerator = rep.pigeon_count;
  rep.ratio_denominator = std::max<std::size_t>(rep.lower_bound, 1);
  rep.ratio = static_cast<double>(rep.ratio_numerator) / static_cast<double>(rep.ratio_denominator);
  rep.sources_plus_destinations = profile.sources.size() + profile.destinations.size();
  rep.within_two_approximation = rep.pigeon_count <= 2 * rep.lower_bound;

  std::vector<std::size_t> pigeons(part.size(), 0);
  for (const Flight& f : r.plan.flights()) {
    const std::size_t c = part.component_of[f.remote];
    if (c != ComponentPartition::kIsolated) ++pigeons[c];
  }

  std::int64_t degree_sum = 0;
  for (std::size_t c = 0; c < part.size(); ++c) {
    ComponentSaving s;
    for (NodeId v : part.components[c]) {
      s.sources += profile.out_degree[v] > 0 ? 1 : 0;
      s.destinations += profile.in_degree[v] > 0 ? 1 : 0;
      s.max_degree = std::max(s.max_degree, profile.total_degree(v));
    }
    s.pigeons = pigeons[c];
    s.saving = static_cast<std::int64_t>(s.sources + s.destinations) -
               static_cast<std::int64_t>(s.pigeons);
    degree_sum += static_cast<std::int64_t>(s.max_degree);
    rep.components.push_back(s);
  }
  rep.nominal_bound = static_cast<std::int64_t>(rep.sources_plus_destinations) - degree_sum;
  return rep;
}

}  // namespace pigeonpost
