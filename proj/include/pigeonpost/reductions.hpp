#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pigeonpost/demand_graph.hpp"
#include "pigeonpost/flight_plan.hpp"

namespace pigeonpost {

/// 3-CNF. Literals are signed 1-based variable indices.
struct CnfFormula {
  std::size_t variables = 0;
  std::vector<std::array<int, 3>> clauses;
};

/// DIMACS cnf: "c" comment lines, one "p cnf V C" header, clauses terminated
/// by 0 (possibly spanning lines), optional trailing "%" marker.
CnfFormula parse_dimacs_cnf(std::string_view text);
std::string to_dimacs(const CnfFormula& f);

struct UndirectedGraph {
  std::size_t n = 0;
  std::vector<std::pair<NodeId, NodeId>> edges;  // u < v, sorted, unique

  UndirectedGraph() = default;
  UndirectedGraph(std::size_t nodes, std::vector<std::pair<NodeId, NodeId>> edge_list);

  bool connected() const;
};

/// {"n": 4, "edges": [[0,1],[1,2]]}
UndirectedGraph parse_undirected_graph(std::string_view json_text);

struct ReductionOutput {
  DemandGraph graph;
  std::size_t budget = 0;
  std::vector<std::string> roles;  // one label per node
  std::vector<Demand> forced_edges;
  std::size_t arms = 0;            // gadget arms per forced edge
  NodeId first_gadget = 0;
};

/// Node of literal +j / -j in the 3SAT instance built for `clauses` clauses.
NodeId literal_node(std::size_t clauses, int literal);
NodeId star_node(std::size_t clauses, std::size_t variables);
/// Gadget node u[e,i,j]: forced edge e, arm i, j in {1,2,3}.
NodeId gadget_node(const ReductionOutput& r, std::size_t e, std::size_t arm, std::size_t j);

/// Demand graph whose 2-hop optimum is at most the budget iff `f` is
/// satisfiable. A clause that repeats a literal contributes one forced edge
/// per distinct literal, and the budget counts the edges actually forced.
ReductionOutput reduce_3sat_to_twohop(const CnfFormula& f);

/// Budget-meeting 2-hop plan for the instance built from `f`, derived from a
/// satisfying assignment (assignment[j] is the value of variable j+1).
/// Throws InputError if the assignment does not satisfy `f`.
FlightPlan twohop_witness_plan(const CnfFormula& f, const ReductionOutput& r,
                               const std::vector<bool>& assignment);

/// Both orientations of every edge; budget n + k - 1. Throws InputError on a
/// disconnected graph or one without edges.
ReductionOutput reduce_vertex_cover_to_multihop(const UndirectedGraph& g, std::size_t k);

struct SatResult {
  bool satisfiable = false;
  std::vector<bool> witness;
};

inline constexpr std::size_t kMaxBruteforceVariables = 20;
inline constexpr std::size_t kMaxBruteforceNodes = 16;

/// Exhaustive search; the witness is the first satisfying assignment in
/// binary counting order with variable 1 as the most significant bit.
SatResult sat_bruteforce(const CnfFormula& f);
std::size_t min_vertex_cover_bruteforce(const UndirectedGraph& g);

}  // namespace pigeonpost
