#include "pigeonpost/generators.hpp"

#include <random>
#include <string>

#include "pigeonpost/error.hpp"

namespace pigeonpost::gen {

namespace {

void require_nodes(std::size_t n, const char* kind) {
  if (n < 2) throw InputError(std::string(kind) + " needs n >= 2");
}

void require_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("p must lie in [0, 1]");
}

// std::uniform_real_distribution is implementation-defined; this is not.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

}  // namespace

DemandGraph cycle(std::size_t n) {
  require_nodes(n, "cycle");
  std::vector<Demand> d;
  for (std::size_t i = 0; i < n; ++i) {
    d.push_back({static_cast<NodeId>(i), static_cast<NodeId>((i + 1) % n)});
  }
  return DemandGraph(n, std::move(d));
}

DemandGraph star(std::size_t n) {
  require_nodes(n, "star");
  std::vector<Demand> d;
  for (std::size_t i = 1; i < n; ++i) d.push_back({0, static_cast<NodeId>(i)});
  return DemandGraph(n, std::move(d));
}

DemandGraph complete(std::size_t n) {
  require_nodes(n, "complete");
  std::vector<Demand> d;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = 0; v < n; ++v) {
      if (u != v) d.push_back({u, v});
    }
  }
  return DemandGraph(n, std::move(d));
}

DemandGraph hub6() { return DemandGraph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 4}, {1, 5}, {2, 3}}); }

DemandGraph random(std::size_t n, double p, std::uint64_t seed) {
  require_probability(p);
  std::mt19937_64 rng(seed);
  std::vector<Demand> d;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = 0; v < n; ++v) {
      if (u != v && unit(rng) < p) d.push_back({u, v});
    }
  }
  return DemandGraph(n, std::move(d));
}

UndirectedGraph random_connected(std::size_t n, double p, std::uint64_t seed) {
  require_nodes(n, "random_connected");
  require_probability(p);
  std::mt19937_64 rng(seed);
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId v = 1; v < n; ++v) edges.emplace_back(static_cast<NodeId>(below(rng, v)), v);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (unit(rng) < p) edges.emplace_back(u, v);
    }
  }
  return UndirectedGraph(n, std::move(edges));
}

UndirectedGraph vc_example() { return UndirectedGraph(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}}); }

CnfFormula sat_example() { return CnfFormula{5, {{1, -3, 2}, {3, 4, 5}}}; }

}  // namespace pigeonpost::gen
