#include "pigeonpost/flight_plan.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <string>
#include <unordered_map>

#include <json.hpp>

#include "pigeonpost/error.hpp"

namespace pigeonpost {

std::string_view to_string(RoutingMode mode) {
  switch (mode) {
    case RoutingMode::singlehop: return "singlehop";
    case RoutingMode::twohop: return "twohop";
    case RoutingMode::multihop: return "multihop";
  }
  return "unknown";
}

std::optional<RoutingMode> parse_routing_mode(std::string_view text) {
  if (text == "singlehop") return RoutingMode::singlehop;
  if (text == "twohop") return RoutingMode::twohop;
  if (text == "multihop") return RoutingMode::multihop;
  return std::nullopt;
}

std::string_view to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::unsatisfied: return "unsatisfied";
    case WitnessKind::direct: return "direct";
    case WitnessKind::relay: return "relay";
    case WitnessKind::path: return "path";
  }
  return "unknown";
}

FlightPlan::FlightPlan(std::vector<Flight> flights) {
  flights_.reserve(flights.size());
  for (const Flight& f : flights) push_back(f);
}

void FlightPlan::push_back(Flight f) {
  if (f.remote == f.home) {
    throw InputError("flight " + std::to_string(f.remote) + "->" + std::to_string(f.home) +
                     " has remote == home");
  }
  flights_.push_back(f);
}

void FlightPlan::append(const FlightPlan& other) {
  flights_.insert(flights_.end(), other.flights_.begin(), other.flights_.end());
}

FlightPlan parse_flight_plan(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("flights") || !doc["flights"].is_array()) {
    throw InputError("plan must be an object with a \"flights\" array");
  }
  FlightPlan plan;
  for (const auto& f : doc["flights"]) {
    if (!f.is_object() || !f.contains("remote") || !f.contains("home") ||
        !f["remote"].is_number_integer() || !f["home"].is_number_integer()) {
      throw InputError("each flight must be {\"remote\": int, \"home\": int}");
    }
    const auto remote = f["remote"].get<std::int64_t>();
    const auto home = f["home"].get<std::int64_t>();
    if (remote < 0 || home < 0) throw InputError("flight endpoints must be non-negative");
    plan.push_back({static_cast<NodeId>(remote), static_cast<NodeId>(home)});
  }
  return plan;
}

std::size_t VerificationReport::unsatisfied_count() const {
  return static_cast<std::size_t>(
      std::count_if(witnesses.begin(), witnesses.end(),
                    [](const DemandWitness& w) { return w.kind == WitnessKind::unsatisfied; }));
}

namespace {

void check_endpoints(const DemandGraph& g, const FlightPlan& plan) {
  for (const Flight& f : plan.flights()) {
    if (f.remote >= g.node_count() || f.home >= g.node_count()) {
      throw InputError("flight " + std::to_string(f.remote) + "->" + std::to_string(f.home) +
                       " leaves the node range of the demand graph");
    }
  }
}

// Slots of every (remote, home) pair, ascending.
class PairIndex {
 public:
  PairIndex(std::size_t n, const FlightPlan& plan) : n_(n), by_remote_(n) {
    for (std::size_t t = 0; t < plan.size(); ++t) {
      const Flight& f = plan[t];
      slots_[key(f.remote, f.home)].push_back(t);
      by_remote_[f.remote].push_back(t);
    }
  }

  const std::vector<std::size_t>* slots(NodeId a, NodeId b) const {
    const auto it = slots_.find(key(a, b));
    return it == slots_.end() ? nullptr : &it->second;
  }

  const std::vector<std::size_t>& leaving(NodeId a) const { return by_remote_[a]; }

 private:
  std::uint64_t key(NodeId a, NodeId b) const {
    return static_cast<std::uint64_t>(a) * n_ + b;
  }

  std::size_t n_;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> slots_;
  std::vector<std::vector<std::size_t>> by_remote_;
};

VerificationReport start_report(RoutingMode mode, const DemandGraph& g, const FlightPlan& plan) {
  check_endpoints(g, plan);
  VerificationReport report;
  report.mode = mode;
  report.pigeon_count = plan.size();
  report.witnesses.reserve(g.demand_count());
  return report;
}

void finish_report(VerificationReport& report) {
  report.satisfied = report.unsatisfied_count() == 0;
}

DemandWitness direct_witness(const Demand& d, std::size_t slot) {
  return {d, WitnessKind::direct, {d.src, d.dst}, {slot}};
}

}  // namespace

VerificationReport verify_singlehop(const DemandGraph& g, const FlightPlan& plan) {
  VerificationReport report = start_report(RoutingMode::singlehop, g, plan);
  const PairIndex index(g.node_count(), plan);
  for (const Demand& d : g.demands()) {
    if (const auto* direct = index.slots(d.src, d.dst)) {
      report.witnesses.push_back(direct_witness(d, direct->front()));
    } else {
      report.witnesses.push_back({d, WitnessKind::unsatisfied, {}, {}});
    }
  }
  finish_report(report);
  return report;
}

VerificationReport verify_twohop(const DemandGraph& g, const FlightPlan& plan) {
  VerificationReport report = start_report(RoutingMode::twohop, g, plan);
  const PairIndex index(g.node_count(), plan);
  for (const Demand& d : g.demands()) {
    if (const auto* direct = index.slots(d.src, d.dst)) {
      report.witnesses.push_back(direct_witness(d, direct->front()));
      continue;
    }
    DemandWitness witness{d, WitnessKind::unsatisfied, {}, {}};
    // Earliest first leg, then the earliest second leg after it.
    for (std::size_t first : index.leaving(d.src)) {
      const NodeId via = plan[first].home;
      const auto* second = index.slots(via, d.dst);
      if (second == nullptr) continue;
      const auto it = std::upper_bound(second->begin(), second->end(), first);
      if (it == second->end()) continue;
      witness = {d, WitnessKind::relay, {d.src, via, d.dst}, {first, *it}};
      break;
    }
    report.witnesses.push_back(std::move(witness));
  }
  finish_report(report);
  return report;
}

VerificationReport verify_multihop(const DemandGraph& g, const FlightPlan& plan) {
  VerificationReport report = start_report(RoutingMode::multihop, g, plan);
  const std::size_t n = g.node_count();

  const DegreeProfile profile = degree_profile(g);
  const std::vector<NodeId>& sources = profile.sources;
  std::vector<std::size_t> source_index(n, 0);
  for (std::size_t k = 0; k < sources.size(); ++k) source_index[sources[k]] = k;

  const std::size_t words = (sources.size() + 63) / 64;
  std::vector<std::uint64_t> known(n * words, 0);
  for (std::size_t k = 0; k < sources.size(); ++k) {
    known[sources[k] * words + k / 64] |= std::uint64_t{1} << (k % 64);
  }
  constexpr std::uint32_t kNever = std::numeric_limits<std::uint32_t>::max();
  // first_arrival[k * n + v]: slot that first carried source k's data into v.
  std::vector<std::uint32_t> first_arrival(sources.size() * n, kNever);

  for (std::size_t t = 0; t < plan.size(); ++t) {
    const Flight& f = plan[t];
    std::uint64_t* from = &known[f.remote * words];
    std::uint64_t* to = &known[f.home * words];
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t fresh = from[w] & ~to[w];
      to[w] |= fresh;
      while (fresh != 0) {
        const std::size_t k = w * 64 + static_cast<std::size_t>(std::countr_zero(fresh));
        first_arrival[k * n + f.home] = static_cast<std::uint32_t>(t);
        fresh &= fresh - 1;
      }
    }
  }

  for (const Demand& d : g.demands()) {
    const std::size_t k = source_index[d.src];
    if (first_arrival[k * n + d.dst] == kNever) {
      report.witnesses.push_back({d, WitnessKind::unsatisfied, {}, {}});
      continue;
    }
    DemandWitness witness{d, WitnessKind::path, {d.dst}, {}};
    NodeId v = d.dst;
    while (v != d.src) {
      const std::uint32_t t = first_arrival[k * n + v];
      witness.slots.push_back(t);
      v = plan[t].remote;
      witness.route.push_back(v);
    }
    std::reverse(witness.route.begin(), witness.route.end());
    std::reverse(witness.slots.begin(), witness.slots.end());
    if (witness.slots.size() == 1) witness.kind = WitnessKind::direct;
    report.witnesses.push_back(std::move(witness));
  }
  finish_report(report);
  return report;
}

VerificationReport verify(RoutingMode mode, const DemandGraph& g, const FlightPlan& plan) {
  switch (mode) {
    case RoutingMode::singlehop: return verify_singlehop(g, plan);
    case RoutingMode::twohop: return verify_twohop(g, plan);
    case RoutingMode::multihop: return verify_multihop(g, plan);
  }
  return verify_multihop(g, plan);
}

PlanStats plan_stats(const FlightPlan& plan, std::size_t node_count) {
  for (const Flight& f : plan.flights()) {
    node_count = std::max<std::size_t>(node_count, std::max(f.remote, f.home) + std::size_t{1});
  }
  PlanStats stats;
  stats.pigeon_count = plan.size();
  stats.breeding.assign(node_count, 0);
  stats.release.assign(node_count, 0);
  for (const Flight& f : plan.flights()) {
    ++stats.breeding[f.home];
    ++stats.release[f.remote];
  }
  return stats;
}

}  // namespace pigeonpost
