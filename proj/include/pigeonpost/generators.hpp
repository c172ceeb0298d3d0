#pragma once

#include <cstddef>
#include <cstdint>

#include "pigeonpost/demand_graph.hpp"
#include "pigeonpost/reductions.hpp"

namespace pigeonpost::gen {

/// (i, i+1 mod n) for every i. n >= 2.
DemandGraph cycle(std::size_t n);
/// (0, i) for i in [1, n). n >= 2.
DemandGraph star(std::size_t n);
/// Every ordered pair. n >= 2.
DemandGraph complete(std::size_t n);
/// Three sources 0..2, three destinations 3..5.
DemandGraph hub6();

/// Each ordered pair u != v is a demand with probability p. Identical for a
/// fixed seed on every platform.
DemandGraph random(std::size_t n, double p, std::uint64_t seed);

/// Random connected undirected graph: a random spanning tree plus each other
/// pair with probability p.
UndirectedGraph random_connected(std::size_t n, double p, std::uint64_t seed);

/// The four-node vertex cover example (u, v, w, x = 0..3; edges uv, vw, uw, ux).
UndirectedGraph vc_example();

/// (x1 or ~x3 or x2) and (x3 or x4 or x5).
CnfFormula sat_example();

}  // namespace pigeonpost::gen
