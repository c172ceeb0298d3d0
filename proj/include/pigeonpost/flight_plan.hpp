#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "pigeonpost/demand_graph.hpp"

namespace pigeonpost {

enum class RoutingMode { singlehop, twohop, multihop };

std::string_view to_string(RoutingMode mode);
std::optional<RoutingMode> parse_routing_mode(std::string_view text);

/// A pigeon released at `remote` that flies straight to its breeding node
/// `home`.
struct Flight {
  NodeId remote = 0;
  NodeId home = 0;

  friend auto operator<=>(const Flight&, const Flight&) = default;
};

/// Totally ordered flight schedule. The position of a flight is its time
/// slot; exactly one pigeon flies per slot.
class FlightPlan {
 public:
  FlightPlan() = default;
  explicit FlightPlan(std::vector<Flight> flights);

  void push_back(Flight f);
  void append(const FlightPlan& other);

  std::span<const Flight> flights() const noexcept { return flights_; }
  std::size_t size() const noexcept { return flights_.size(); }
  bool empty() const noexcept { return flights_.empty(); }
  const Flight& operator[](std::size_t slot) const { return flights_[slot]; }

  friend bool operator==(const FlightPlan&, const FlightPlan&) = default;

 private:
  std::vector<Flight> flights_;
};

FlightPlan parse_flight_plan(std::string_view json_text);

enum class WitnessKind { unsatisfied, direct, relay, path };

std::string_view to_string(WitnessKind kind);

/// How one demand is delivered. `route` lists the visited nodes from source
/// to destination and `slots[k]` is the slot of the flight route[k] ->
/// route[k+1]; slots are strictly increasing. Both are empty when the demand
/// is not delivered.
struct DemandWitness {
  Demand demand;
  WitnessKind kind = WitnessKind::unsatisfied;
  std::vector<NodeId> route;
  std::vector<std::size_t> slots;
};

struct VerificationReport {
  RoutingMode mode = RoutingMode::singlehop;
  std::vector<DemandWitness> witnesses;  // same order as g.demands()
  bool satisfied = true;
  std::size_t pigeon_count = 0;

  std::size_t unsatisfied_count() const;
};

VerificationReport verify_singlehop(const DemandGraph& g, const FlightPlan& plan);
VerificationReport verify_twohop(const DemandGraph& g, const FlightPlan& plan);

// Forward sweep over the slots keeping, per node, the set of demand sources
// whose information has reached it; information may wait at a node for any
// number of slots.
VerificationReport verify_multihop(const DemandGraph& g, const FlightPlan& plan);

VerificationReport verify(RoutingMode mode, const DemandGraph& g, const FlightPlan& plan);

struct PlanStats {
  std::size_t pigeon_count = 0;
  std::vector<std::size_t> breeding;  // flights with home == v
  std::vector<std::size_t> release;   // flights with remote == v
};

/// `node_count` of zero sizes the per-node tables from the largest endpoint.
PlanStats plan_stats(const FlightPlan& plan, std::size_t node_count = 0);

}  // namespace pigeonpost
