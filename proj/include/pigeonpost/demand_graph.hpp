#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace pigeonpost {

/// Dense node index in [0, n).
using NodeId = std::uint32_t;

/// One unit of demand that must travel from `src` to `dst`.
struct Demand {
  NodeId src = 0;
  NodeId dst = 0;

  friend auto operator<=>(const Demand&, const Demand&) = default;
};

/// Directed, unweighted demand graph on nodes [0, n).
///
/// Construction validates every pair (no self-demand, endpoints < n) and
/// stores the demand set sorted lexicographically with duplicates removed.
/// The number of dropped duplicates is kept for reporting.
class DemandGraph {
 public:
  DemandGraph() = default;
  DemandGraph(std::size_t node_count, std::vector<Demand> demands);

  std::size_t node_count() const noexcept { return node_count_; }
  std::span<const Demand> demands() const noexcept { return demands_; }
  std::size_t demand_count() const noexcept { return demands_.size(); }
  bool empty() const noexcept { return demands_.empty(); }
  std::size_t duplicates_dropped() const noexcept { return duplicates_dropped_; }

  bool contains(NodeId src, NodeId dst) const noexcept;

  friend bool operator==(const DemandGraph& a, const DemandGraph& b) {
    return a.node_count_ == b.node_count_ && a.demands_ == b.demands_;
  }

 private:
  std::size_t node_count_ = 0;
  std::vector<Demand> demands_;
  std::size_t duplicates_dropped_ = 0;
};

struct DegreeProfile {
  std::vector<NodeId> sources;       // positive out-degree, ascending
  std::vector<NodeId> destinations;  // positive in-degree, ascending
  std::vector<std::size_t> out_degree;
  std::vector<std::size_t> in_degree;

  std::size_t total_degree(NodeId v) const { return out_degree[v] + in_degree[v]; }
};

/// Weakly connected components of the demand graph, restricted to nodes that
/// touch at least one demand. Components are ordered by their smallest member
/// and each member list is ascending.
struct ComponentPartition {
  static constexpr std::size_t kIsolated = static_cast<std::size_t>(-1);

  std::vector<std::vector<NodeId>> components;
  std::vector<NodeId> isolated;
  std::vector<std::size_t> component_of;  // kIsolated for isolated nodes

  std::size_t size() const noexcept { return components.size(); }
};

struct LowerBound {
  std::size_t global = 0;                   // max(|S|, |D|)
  std::vector<std::size_t> per_component;   // max(|S_c|, |D_c|)
  std::size_t component_sum = 0;
};

/// A connected piece of a demand graph relabelled to [0, m).
struct ComponentGraph {
  DemandGraph graph;
  std::vector<NodeId> nodes;  // local index -> original NodeId
};

DemandGraph parse_demand_graph(std::string_view json_text);

DegreeProfile degree_profile(const DemandGraph& g);
ComponentPartition weakly_connected_components(const DemandGraph& g);
LowerBound lower_bound(const DemandGraph& g);

/// Induced subgraph on `nodes` (ascending), relabelled by position.
ComponentGraph induced_component(const DemandGraph& g, std::span<const NodeId> nodes);

}  // namespace pigeonpost
