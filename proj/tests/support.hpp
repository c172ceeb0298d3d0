#pragma once

#include <vector>

#include "oracles.hpp"
#include "pigeonpost/demand_graph.hpp"
#include "pigeonpost/flight_plan.hpp"

namespace support {

inline std::vector<oracle::Pair> pairs(const pigeonpost::DemandGraph& g) {
  std::vector<oracle::Pair> out;
  for (const auto& d : g.demands()) out.emplace_back(d.src, d.dst);
  return out;
}

inline std::vector<oracle::Pair> pairs(const pigeonpost::FlightPlan& p) {
  std::vector<oracle::Pair> out;
  for (const auto& f : p.flights()) out.emplace_back(f.remote, f.home);
  return out;
}

inline pigeonpost::FlightPlan plan(std::vector<pigeonpost::Flight> flights) {
  return pigeonpost::FlightPlan(std::move(flights));
}

// Every demand set on n nodes whose demands form one weakly connected
// component covering all n nodes.
inline std::vector<pigeonpost::DemandGraph> connected_graphs(unsigned n) {
  std::vector<oracle::Pair> all;
  for (unsigned u = 0; u < n; ++u) {
    for (unsigned v = 0; v < n; ++v) {
      if (u != v) all.emplace_back(u, v);
    }
  }
  std::vector<pigeonpost::DemandGraph> out;
  for (unsigned long mask = 1; mask < (1UL << all.size()); ++mask) {
    std::vector<pigeonpost::Demand> d;
    std::vector<oracle::Pair> plain;
    for (std::size_t k = 0; k < all.size(); ++k) {
      if ((mask >> k) & 1UL) {
        d.push_back({all[k].first, all[k].second});
        plain.push_back(all[k]);
      }
    }
    const auto comps = oracle::components(n, plain);
    if (comps.size() == 1 && comps.front().size() == n) out.emplace_back(n, std::move(d));
  }
  return out;
}

}  // namespace support
