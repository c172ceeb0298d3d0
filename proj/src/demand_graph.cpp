#include "pigeonpost/demand_graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include <json.hpp>

#include "pigeonpost/error.hpp"

namespace pigeonpost {

DemandGraph::DemandGraph(std::size_t node_count, std::vector<Demand> demands)
    : node_count_(node_count), demands_(std::move(demands)) {
  for (const Demand& d : demands_) {
    if (d.src >= node_count_ || d.dst >= node_count_) {
      throw InputError("demand (" + std::to_string(d.src) + "," + std::to_string(d.dst) +
                       ") has an endpoint >= n=" + std::to_string(node_count_));
    }
    if (d.src == d.dst) {
      throw InputError("self-demand on node " + std::to_string(d.src));
    }
  }
  std::sort(demands_.begin(), demands_.end());
  const auto last = std::unique(demands_.begin(), demands_.end());
  duplicates_dropped_ = static_cast<std::size_t>(demands_.end() - last);
  demands_.erase(last, demands_.end());
}

bool DemandGraph::contains(NodeId src, NodeId dst) const noexcept {
  return std::binary_search(demands_.begin(), demands_.end(), Demand{src, dst});
}

DemandGraph parse_demand_graph(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("demands")) {
    throw InputError("demand graph must be an object with keys \"n\" and \"demands\"");
  }
  const auto& n = doc["n"];
  if (!n.is_number_integer()) throw InputError("\"n\" must be an integer");
  if (n.get<std::int64_t>() < 0) throw InputError("\"n\" must be non-negative");
  const auto node_count = n.get<std::int64_t>();

  const auto& list = doc["demands"];
  if (!list.is_array()) throw InputError("\"demands\" must be an array");
  std::vector<Demand> demands;
  demands.reserve(list.size());
  for (const auto& pair : list) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
        !pair[1].is_number_integer()) {
      throw InputError("each demand must be a pair [src, dst] of integers");
    }
    const auto src = pair[0].get<std::int64_t>();
    const auto dst = pair[1].get<std::int64_t>();
    if (src < 0 || dst < 0) throw InputError("demand endpoints must be non-negative");
    if (src >= node_count || dst >= node_count) {
      throw InputError("demand (" + std::to_string(src) + "," + std::to_string(dst) +
                       ") has an endpoint >= n=" + std::to_string(node_count));
    }
    demands.push_back({static_cast<NodeId>(src), static_cast<NodeId>(dst)});
  }
  return DemandGraph(static_cast<std::size_t>(node_count), std::move(demands));
}

DegreeProfile degree_profile(const DemandGraph& g) {
  DegreeProfile p;
  p.out_degree.assign(g.node_count(), 0);
  p.in_degree.assign(g.node_count(), 0);
  for (const Demand& d : g.demands()) {
    ++p.out_degree[d.src];
    ++p.in_degree[d.dst];
  }
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (p.out_degree[v] > 0) p.sources.push_back(v);
    if (p.in_degree[v] > 0) p.destinations.push_back(v);
  }
  return p;
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  // The smaller root wins so that each root is its set's smallest member.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

ComponentPartition weakly_connected_components(const DemandGraph& g) {
  const std::size_t n = g.node_count();
  DisjointSets sets(n);
  std::vector<bool> touched(n, false);
  for (const Demand& d : g.demands()) {
    sets.unite(d.src, d.dst);
    touched[d.src] = touched[d.dst] = true;
  }

  ComponentPartition part;
  part.component_of.assign(n, ComponentPartition::kIsolated);
  std::vector<std::size_t> index_of_root(n, ComponentPartition::kIsolated);
  // Ascending scan: a component is opened at its smallest member.
  for (NodeId v = 0; v < n; ++v) {
    if (!touched[v]) {
      part.isolated.push_back(v);
      continue;
    }
    const std::size_t root = sets.find(v);
    if (index_of_root[root] == ComponentPartition::kIsolated) {
      index_of_root[root] = part.components.size();
      part.components.emplace_back();
    }
    part.component_of[v] = index_of_root[root];
    part.components[index_of_root[root]].push_back(v);
  }
  return part;
}

LowerBound lower_bound(const DemandGraph& g) {
  const DegreeProfile profile = degree_profile(g);
  const ComponentPartition part = weakly_connected_components(g);

  LowerBound lb;
  lb.global = std::max(profile.sources.size(), profile.destinations.size());
  lb.per_component.reserve(part.size());
  for (const auto& members : part.components) {
    std::size_t s = 0;
    std::size_t d = 0;
    for (NodeId v : members) {
      s += profile.out_degree[v] > 0 ? 1 : 0;
      d += profile.in_degree[v] > 0 ? 1 : 0;
    }
    lb.per_component.push_back(std::max(s, d));
    lb.component_sum += lb.per_component.back();
  }
  return lb;
}

ComponentGraph induced_component(const DemandGraph& g, std::span<const NodeId> nodes) {
  std::vector<std::size_t> local(g.node_count(), ComponentPartition::kIsolated);
  for (std::size_t i = 0; i < nodes.size(); ++i) local[nodes[i]] = i;

  std::vector<Demand> demands;
  for (const Demand& d : g.demands()) {
    if (local[d.src] != ComponentPartition::kIsolated &&
        local[d.dst] != ComponentPartition::kIsolated) {
      demands.push_back({static_cast<NodeId>(local[d.src]), static_cast<NodeId>(local[d.dst])});
    }
  }
  return {DemandGraph(nodes.size(), std::move(demands)), {nodes.begin(), nodes.end()}};
}

}  // namespace pigeonpost
