#include "pigeonpost/exact.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <unordered_map>
#include <unordered_set>

#include "pigeonpost/error.hpp"

namespace pigeonpost {

void SearchLimits::validate() const {
  if (max_nodes == 0 || max_demands == 0 || time_budget_seconds <= 0.0 || node_budget == 0) {
    throw InputError("search limits must be positive");
  }
}

WalkState extend_walk(const DemandGraph& component, const WalkState& state, NodeId next) {
  WalkState out = state;
  const auto demands = component.demands();
  for (std::size_t k = 0; k < demands.size(); ++k) {
    if (demands[k].dst == next && state.appeared[demands[k].src]) out.satisfied[k] = true;
  }
  out.appeared[next] = true;
  out.current = next;
  return out;
}

FlightPlan walk_to_plan(const std::vector<NodeId>& walk) {
  FlightPlan plan;
  for (std::size_t k = 0; k + 1 < walk.size(); ++k) plan.push_back({walk[k], walk[k + 1]});
  return plan;
}

namespace {

using Clock = std::chrono::steady_clock;

class Budget {
 public:
  explicit Budget(const SearchLimits& limits)
      : deadline_(Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                     std::chrono::duration<double>(limits.time_budget_seconds))),
        node_budget_(limits.node_budget) {}

  // False once either the expansion or the wall-clock budget is spent.
  bool charge() {
    ++expansions_;
    if (expansions_ > node_budget_) return false;
    if ((expansions_ & 0x3ff) == 0 && Clock::now() > deadline_) timed_out_ = true;
    return !timed_out_;
  }

  std::uint64_t expansions() const { return expansions_; }

 private:
  Clock::time_point deadline_;
  std::uint64_t node_budget_;
  std::uint64_t expansions_ = 0;
  bool timed_out_ = false;
};

FlightPlan relabel(const FlightPlan& local, const std::vector<NodeId>& nodes) {
  FlightPlan plan;
  for (const Flight& f : local.flights()) plan.push_back({nodes[f.remote], nodes[f.home]});
  return plan;
}

// Cheaper of the coordinator and cycle plans for a connected component.
FlightPlan fallback_multihop(const DemandGraph& component) {
  PlannerResult hub = plan_coordinator(component);
  PlannerResult ring = plan_cycle(component);
  return hub.plan.size() <= ring.plan.size() ? hub.plan : ring.plan;
}

// Breadth-first search for a shortest covering walk.
//
// A state is (appeared, pending): `pending` holds every node v for which some
// demand (u, v) with u already in the walk is still undelivered. Appending v
// delivers all of them at once, so (appeared, pending) determines the future
// exactly and the full satisfied set need not be stored. The last node is not
// part of the key either: re-appending it never changes the state.
struct WalkSearch {
  std::size_t m = 0;
  std::vector<std::uint32_t> out_mask;
  std::uint32_t source_mask = 0;

  explicit WalkSearch(const DemandGraph& component)
      : m(component.node_count()), out_mask(component.node_count(), 0) {
    for (const Demand& d : component.demands()) {
      out_mask[d.src] |= std::uint32_t{1} << d.dst;
      source_mask |= std::uint32_t{1} << d.src;
    }
  }

  std::uint32_t key(std::uint32_t appeared, std::uint32_t pending) const {
    return appeared | (pending << m);
  }

  bool goal(std::uint32_t appeared, std::uint32_t pending) const {
    return pending == 0 && (source_mask & ~appeared) == 0;
  }
};

struct WalkOutcome {
  std::vector<NodeId> walk;
  bool found = false;
  bool exhausted_budget = false;
};

WalkOutcome shortest_covering_walk(const DemandGraph& component, std::size_t max_length,
                                   Budget& budget) {
  const WalkSearch search(component);
  const std::size_t m = search.m;
  const std::uint32_t low = (std::uint32_t{1} << m) - 1;

  struct Visit {
    std::uint32_t parent;
    NodeId node;
  };
  std::unordered_map<std::uint32_t, Visit> seen;
  std::vector<std::uint32_t> frontier;

  auto rebuild = [&](std::uint32_t k) {
    std::vector<NodeId> walk;
    for (;;) {
      const Visit& v = seen.at(k);
      walk.push_back(v.node);
      if (v.parent == k) break;
      k = v.parent;
    }
    std::reverse(walk.begin(), walk.end());
    return walk;
  };

  for (NodeId x = 0; x < m; ++x) {
    const std::uint32_t appeared = std::uint32_t{1} << x;
    const std::uint32_t k = search.key(appeared, search.out_mask[x]);
    if (!seen.emplace(k, Visit{k, x}).second) continue;
    if (search.goal(appeared, search.out_mask[x])) return {{x}, true, false};
    frontier.push_back(k);
  }

  for (std::size_t depth = 1; depth <= max_length && !frontier.empty(); ++depth) {
    std::vector<std::uint32_t> next;
    for (const std::uint32_t k : frontier) {
      const std::uint32_t appeared = k & low;
      const std::uint32_t pending = k >> m;
      for (NodeId x = 0; x < m; ++x) {
        const std::uint32_t bit = std::uint32_t{1} << x;
        const std::uint32_t a2 = appeared | bit;
        const std::uint32_t p2 = (pending & ~bit) | ((appeared & bit) ? 0 : search.out_mask[x]);
        const std::uint32_t k2 = search.key(a2, p2);
        if (k2 == k || !seen.emplace(k2, Visit{k, x}).second) continue;
        if (search.goal(a2, p2)) return {rebuild(k2), true, false};
        if (!budget.charge()) return {{}, false, true};
        next.push_back(k2);
      }
    }
    frontier = std::move(next);
  }
  return {};
}

}  // namespace

PlannerResult optimal_multihop(const DemandGraph& g, const SearchLimits& limits) {
  limits.validate();
  const ComponentPartition part = weakly_connected_components(g);
  Budget budget(limits);

  PlannerResult r;
  r.mode = RoutingMode::multihop;
  r.algorithm = "exact";
  r.proven_optimal = true;
  for (const auto& nodes : part.components) {
    const ComponentGraph component = induced_component(g, nodes);
    const std::size_t m = nodes.size();
    std::size_t max_length = 2 * m - 2;
    if (limits.max_walk_length != 0) max_length = std::min(max_length, limits.max_walk_length);

    WalkOutcome outcome;
    if (m <= std::min<std::size_t>(limits.max_nodes, 16) &&
        component.graph.demand_count() <= limits.max_demands) {
      outcome = shortest_covering_walk(component.graph, max_length, budget);
    }
    if (outcome.found) {
      r.plan.append(relabel(walk_to_plan(outcome.walk), nodes));
    } else {
      r.proven_optimal = false;
      r.plan.append(relabel(fallback_multihop(component.graph), nodes));
    }
  }
  r.expansions = budget.expansions();
  finalize_result(g, r);
  return r;
}

namespace {

// Depth-first search over ordered flight sequences of a fixed length.
//
// The search state is the set of undelivered demands plus the set of flown
// (remote, home) pairs; a later flight (w, v) completes demand (u, v) when
// (u, w) has been flown. Two pruning rules keep it small:
//  * a flight that changes neither set in a way that matters is skipped,
//    since deleting it from any plan leaves every delivery intact;
//  * adjacent flights (a,b), (c,d) with b != c and d != a commute, so only
//    their ascending order is explored.
// Failed (state, last flight, remaining length) triples are memoised.
class TwoHopSearch {
 public:
  TwoHopSearch(const DemandGraph& g, std::vector<NodeId> active, Budget& budget)
      : active_(std::move(active)), budget_(budget) {
    const std::size_t a = active_.size();
    std::vector<std::size_t> local(g.node_count(), 0);
    for (std::size_t i = 0; i < a; ++i) local[active_[i]] = i;

    pair_of_.assign(a * a, kNone);
    for (std::size_t u = 0; u < a; ++u) {
      for (std::size_t v = 0; v < a; ++v) {
        if (u == v) continue;
        pair_of_[u * a + v] = from_.size();
        from_.push_back(u);
        to_.push_back(v);
      }
    }
    const std::size_t pairs = from_.size();
    direct_.assign(pairs, 0);
    prefix_.assign(pairs, 0);
    relays_.assign(pairs, {});
    out_pairs_.assign(a, 0);
    for (std::size_t p = 0; p < pairs; ++p) out_pairs_[from_[p]] |= bit(p);

    for (const Demand& d : g.demands()) {
      const std::size_t k = src_.size();
      const std::size_t u = local[d.src];
      const std::size_t v = local[d.dst];
      src_.push_back(u);
      dst_.push_back(v);
      direct_[pair_of_[u * a + v]] |= bit(k);
      for (std::size_t w = 0; w < a; ++w) {
        if (w == u || w == v) continue;
        prefix_[pair_of_[u * a + w]] |= bit(k);
        relays_[pair_of_[w * a + v]].push_back({k, pair_of_[u * a + w]});
      }
    }
  }

  std::uint64_t all_demands() const {
    return src_.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << src_.size()) - 1;
  }

  // Returns the plan of length exactly `length`, if one exists.
  std::optional<FlightPlan> search(std::size_t length) {
    path_.clear();
    if (!dfs(all_demands(), 0, kNone, length)) return std::nullopt;
    FlightPlan plan;
    for (std::size_t p : path_) plan.push_back({active_[from_[p]], active_[to_[p]]});
    return plan;
  }

  bool out_of_budget() const { return out_of_budget_; }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  struct Relay {
    std::size_t demand;
    std::size_t first_leg;
  };

  struct Key {
    std::uint64_t unsatisfied;
    std::uint64_t flown;
    std::uint32_t last;
    std::uint32_t remaining;

    bool operator==(const Key&) const = default;
  };

  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      std::uint64_t h = k.unsatisfied * 0x9e3779b97f4a7c15ULL;
      h ^= k.flown + 0x7f4a7c159e3779b9ULL + (h << 6) + (h >> 2);
      h ^= (std::uint64_t{k.last} << 32 | k.remaining) * 0xc2b2ae3d27d4eb4fULL;
      return static_cast<std::size_t>(h ^ (h >> 29));
    }
  };

  static std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

  bool dependent(std::size_t p, std::size_t q) const {
    return to_[p] == from_[q] || to_[q] == from_[p];
  }

  // Every undelivered demand needs a future flight into its destination, and
  // every source whose demand has no first leg yet needs one out of it.
  std::size_t remaining_lower_bound(std::uint64_t unsatisfied, std::uint64_t flown) const {
    std::uint64_t dsts = 0;
    std::uint64_t fresh_sources = 0;
    for (std::uint64_t rest = unsatisfied; rest != 0; rest &= rest - 1) {
      const auto k = static_cast<std::size_t>(std::countr_zero(rest));
      dsts |= bit(dst_[k]);
      if ((out_pairs_[src_[k]] & flown) == 0) fresh_sources |= bit(src_[k]);
    }
    return static_cast<std::size_t>(std::max(std::popcount(dsts), std::popcount(fresh_sources)));
  }

  std::uint64_t relevant_pairs(std::uint64_t unsatisfied) const {
    std::uint64_t mask = 0;
    for (std::uint64_t rest = unsatisfied; rest != 0; rest &= rest - 1) {
      mask |= out_pairs_[src_[static_cast<std::size_t>(std::countr_zero(rest))]];
    }
    return mask;
  }

  bool dfs(std::uint64_t unsatisfied, std::uint64_t flown, std::size_t last,
           std::size_t remaining) {
    if (unsatisfied == 0) return true;
    if (remaining == 0 || out_of_budget_) return false;
    if (remaining_lower_bound(unsatisfied, flown) > remaining) return false;

    const Key key{unsatisfied, flown & relevant_pairs(unsatisfied),
                  static_cast<std::uint32_t>(last), static_cast<std::uint32_t>(remaining)};
    if (failed_.contains(key)) return false;

    for (std::size_t q = 0; q < from_.size(); ++q) {
      if (last != kNone && q <= last && !dependent(last, q)) continue;

      std::uint64_t delivered = direct_[q] & unsatisfied;
      for (const Relay& r : relays_[q]) {
        if ((unsatisfied & bit(r.demand)) && (flown & bit(r.first_leg))) {
          delivered |= bit(r.demand);
        }
      }
      const bool opens_relay = (flown & bit(q)) == 0 && (prefix_[q] & unsatisfied) != 0;
      if (delivered == 0 && !opens_relay) continue;

      if (!budget_.charge()) {
        out_of_budget_ = true;
        return false;
      }
      path_.push_back(q);
      if (dfs(unsatisfied & ~delivered, flown | bit(q), q, remaining - 1)) return true;
      path_.pop_back();
      if (out_of_budget_) return false;
    }
    if (failed_.size() < kMemoCap) failed_.insert(key);
    return false;
  }

  static constexpr std::size_t kMemoCap = 20'000'000;

  std::vector<NodeId> active_;
  Budget& budget_;
  std::vector<std::size_t> pair_of_;
  std::vector<std::size_t> from_;
  std::vector<std::size_t> to_;
  std::vector<std::uint64_t> direct_;   // per pair: demand it serves directly
  std::vector<std::uint64_t> prefix_;   // per pair: demands it can be a first leg of
  std::vector<std::vector<Relay>> relays_;  // per pair: demands it can be a second leg of
  std::vector<std::uint64_t> out_pairs_;    // per node: pairs leaving it
  std::vector<std::size_t> src_;
  std::vector<std::size_t> dst_;
  std::vector<std::size_t> path_;
  std::unordered_set<Key, KeyHash> failed_;
  bool out_of_budget_ = false;
};

}  // namespace

PlannerResult optimal_twohop(const DemandGraph& g, const SearchLimits& limits) {
  limits.validate();
  PlannerResult hub = plan_coordinator(g);

  PlannerResult r;
  r.mode = RoutingMode::twohop;
  r.algorithm = "exact";

  const ComponentPartition part = weakly_connected_components(g);
  std::vector<NodeId> active;
  for (const auto& nodes : part.components) active.insert(active.end(), nodes.begin(), nodes.end());
  std::sort(active.begin(), active.end());

  // Pair and demand sets are 64-bit masks.
  const bool affordable = active.size() <= std::min<std::size_t>(limits.max_nodes, 8) &&
                          g.demand_count() <= std::min<std::size_t>(limits.max_demands, 64);
  std::size_t ceiling = hub.plan.size();
  if (limits.max_walk_length != 0) ceiling = std::min(ceiling, limits.max_walk_length + 1);

  bool proven = affordable;
  std::optional<FlightPlan> found;
  Budget budget(limits);
  if (affordable) {
    TwoHopSearch search(g, active, budget);
    for (std::size_t k = lower_bound(g).global; k < ceiling && !found; ++k) {
      found = search.search(k);
      if (search.out_of_budget()) {
        proven = false;
        break;
      }
    }
    if (!found && ceiling < hub.plan.size()) proven = false;
  }

  r.plan = found ? *found : hub.plan;
  r.proven_optimal = proven;
  r.expansions = budget.expansions();
  finalize_result(g, r);
  return r;
}

Certificate certify(const DemandGraph& g, const PlannerResult& r) {
  Certificate c;
  c.mode = r.mode;
  c.pigeon_count = r.plan.size();
  c.lower_bound = lower_bound(g).component_sum;
  c.tight = c.pigeon_count == c.lower_bound;
  c.proven_optimal = r.proven_optimal;

  const VerificationReport report = verify(r.mode, g, r.plan);
  if (!report.satisfied) {
    c.reason = std::to_string(report.unsatisfied_count()) + " demand(s) not delivered";
  } else if (c.pigeon_count < c.lower_bound) {
    c.reason = "pigeon count below the component-wise lower bound";
  } else if (r.pigeon_count != c.pigeon_count) {
    c.reason = "reported pigeon count does not match the plan";
  } else if (!r.proven_optimal) {
    c.reason = "result is not proven optimal";
  }
  c.valid = c.reason.empty();
  return c;
}

}  // namespace pigeonpost
