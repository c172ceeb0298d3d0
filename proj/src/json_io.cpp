#include "pigeonpost/json_io.hpp"

namespace pigeonpost::json {

namespace {

json pairs(std::span<const Demand> demands) {
  json out = json::array();
  for (const Demand& d : demands) out.push_back({d.src, d.dst});
  return out;
}

}  // namespace

json to_json(const DemandGraph& g) {
  return {{"n", g.node_count()}, {"demands", pairs(g.demands())}};
}

json to_json(const FlightPlan& plan) {
  json flights = json::array();
  for (const Flight& f : plan.flights()) flights.push_back({{"remote", f.remote}, {"home", f.home}});
  return {{"flights", std::move(flights)}};
}

json to_json(const VerificationReport& report) {
  json demands = json::array();
  json failures = json::array();
  for (const DemandWitness& w : report.witnesses) {
    demands.push_back({{"demand", {w.demand.src, w.demand.dst}},
                       {"kind", std::string(to_string(w.kind))},
                       {"route", w.route},
                       {"slots", w.slots}});
    if (w.kind == WitnessKind::unsatisfied) failures.push_back({w.demand.src, w.demand.dst});
  }
  return {{"mode", std::string(to_string(report.mode))},
          {"satisfied", report.satisfied},
          {"pigeon_count", report.pigeon_count},
          {"unsatisfied_count", report.unsatisfied_count()},
          {"demands", std::move(demands)},
          {"failures", std::move(failures)}};
}

json to_json(const ApproximationReport& report) {
  json components = json::array();
  for (const ComponentSaving& c : report.components) {
    components.push_back({{"sources", c.sources},
                          {"destinations", c.destinations},
                          {"max_degree", c.max_degree},
                          {"pigeons", c.pigeons},
                          {"saving", c.saving}});
  }
  return {{"pigeon_count", report.pigeon_count},
          {"lower_bound", report.lower_bound},
          {"ratio", {{"numerator", report.ratio_numerator},
                     {"denominator", report.ratio_denominator},
                     {"value", report.ratio}}},
          {"sources_plus_destinations", report.sources_plus_destinations},
          {"nominal_bound", report.nominal_bound},
          {"within_two_approximation", report.within_two_approximation},
          {"components", std::move(components)}};
}

json to_json(const Certificate& cert) {
  return {{"valid", cert.valid},
          {"mode", std::string(to_string(cert.mode))},
          {"pigeon_count", cert.pigeon_count},
          {"lower_bound", cert.lower_bound},
          {"tight", cert.tight},
          {"proven_optimal", cert.proven_optimal},
          {"reason", cert.reason}};
}

json to_json(const UndirectedGraph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges) edges.push_back({u, v});
  return {{"n", g.n}, {"edges", std::move(edges)}};
}

json to_json(const PlannerResult& r) {
  json out = to_json(r.plan);
  out["mode"] = std::string(to_string(r.mode));
  out["algorithm"] = r.algorithm;
  out["pigeon_count"] = r.pigeon_count;
  out["lower_bound"] = r.lower_bound;
  out["ratio"] = {{"numerator", r.pigeon_count},
                  {"denominator", r.ratio_denominator()},
                  {"value", r.ratio()}};
  out["proven_optimal"] = r.proven_optimal;
  out["coordinators"] = r.coordinators;
  out["component_counts"] = r.component_counts;
  out["expansions"] = r.expansions;
  return out;
}

json bounds_json(const DemandGraph& g) {
  const DegreeProfile profile = degree_profile(g);
  const ComponentPartition part = weakly_connected_components(g);
  const LowerBound lb = lower_bound(g);
  json components = json::array();
  for (std::size_t c = 0; c < part.size(); ++c) {
    components.push_back({{"nodes", part.components[c]}, {"lower_bound", lb.per_component[c]}});
  }
  return {{"n", g.node_count()},
          {"demand_count", g.demand_count()},
          {"duplicates_dropped", g.duplicates_dropped()},
          {"sources", profile.sources},
          {"destinations", profile.destinations},
          {"components", std::move(components)},
          {"isolated", part.isolated},
          {"lower_bound", lb.global},
          {"component_lower_bound", lb.component_sum}};
}

json to_json(const ReductionOutput& r, const std::string& kind) {
  json out = to_json(r.graph);
  out["kind"] = kind;
  out["budget"] = r.budget;
  out["roles"] = r.roles;
  out["forced_edges"] = pairs(r.forced_edges);
  out["arms"] = r.arms;
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace pigeonpost::json
