#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pigeonpost/demand_graph.hpp"
#include "pigeonpost/error.hpp"
#include "pigeonpost/exact.hpp"
#include "pigeonpost/flight_plan.hpp"
#include "pigeonpost/generators.hpp"
#include "pigeonpost/ilp.hpp"
#include "pigeonpost/json_io.hpp"
#include "pigeonpost/planners.hpp"
#include "pigeonpost/reductions.hpp"

namespace py = pybind11;
using namespace pigeonpost;

namespace {

using Pair = std::pair<NodeId, NodeId>;

DemandGraph make_graph(std::size_t n, const std::vector<Pair>& demands) {
  std::vector<Demand> d;
  d.reserve(demands.size());
  for (const auto& [u, v] : demands) d.push_back({u, v});
  return DemandGraph(n, std::move(d));
}

std::vector<Pair> demand_pairs(const DemandGraph& g) {
  std::vector<Pair> out;
  for (const Demand& d : g.demands()) out.emplace_back(d.src, d.dst);
  return out;
}

FlightPlan make_plan(const std::vector<Pair>& flights) {
  FlightPlan plan;
  for (const auto& [r, h] : flights) plan.push_back({r, h});
  return plan;
}

std::vector<Pair> plan_pairs(const FlightPlan& plan) {
  std::vector<Pair> out;
  for (const Flight& f : plan.flights()) out.emplace_back(f.remote, f.home);
  return out;
}

RoutingMode mode_of(const std::string& text) {
  const auto mode = parse_routing_mode(text);
  if (!mode) throw InputError("unknown mode \"" + text + "\"");
  return *mode;
}

SearchLimits make_limits(std::size_t max_nodes, std::size_t max_demands, double time_budget,
                         std::uint64_t node_budget) {
  SearchLimits l;
  l.max_nodes = max_nodes;
  l.max_demands = max_demands;
  l.time_budget_seconds = time_budget;
  l.node_budget = node_budget;
  return l;
}

#define PIGEONPOST_LIMIT_ARGS                                                              \
  py::arg("max_nodes") = SearchLimits{}.max_nodes,                                          \
      py::arg("max_demands") = SearchLimits{}.max_demands,                                  \
      py::arg("time_budget") = SearchLimits{}.time_budget_seconds,                          \
      py::arg("node_budget") = SearchLimits{}.node_budget

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Pigeon-post network design: planners, exact solvers, verifiers and reductions";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

  py::class_<DemandGraph>(m, "DemandGraph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("demands"))
      .def_static("from_json", &parse_demand_graph, py::arg("text"))
      .def_property_readonly("n", &DemandGraph::node_count)
      .def_property_readonly("demands", &demand_pairs)
      .def("__len__", &DemandGraph::demand_count)
      .def("to_json", [](const DemandGraph& g) { return json::dump(json::to_json(g)); })
      .def("__repr__", [](const DemandGraph& g) {
        return "DemandGraph(n=" + std::to_string(g.node_count()) +
               ", demands=" + std::to_string(g.demand_count()) + ")";
      });

  py::class_<PlannerResult>(m, "PlannerResult")
      .def_property_readonly("flights", [](const PlannerResult& r) { return plan_pairs(r.plan); })
      .def_property_readonly("mode", [](const PlannerResult& r) { return std::string(to_string(r.mode)); })
      .def_readonly("algorithm", &PlannerResult::algorithm)
      .def_readonly("pigeon_count", &PlannerResult::pigeon_count)
      .def_readonly("lower_bound", &PlannerResult::lower_bound)
      .def_readonly("proven_optimal", &PlannerResult::proven_optimal)
      .def_readonly("coordinators", &PlannerResult::coordinators)
      .def_readonly("component_counts", &PlannerResult::component_counts)
      .def_property_readonly("ratio", &PlannerResult::ratio)
      .def("to_json", [](const PlannerResult& r) { return json::dump(json::to_json(r)); });

  py::class_<Certificate>(m, "Certificate")
      .def_readonly("valid", &Certificate::valid)
      .def_readonly("pigeon_count", &Certificate::pigeon_count)
      .def_readonly("lower_bound", &Certificate::lower_bound)
      .def_readonly("tight", &Certificate::tight)
      .def_readonly("proven_optimal", &Certificate::proven_optimal)
      .def_readonly("reason", &Certificate::reason);

  m.def("lower_bound", [](const DemandGraph& g) { return lower_bound(g).global; }, py::arg("graph"));
  m.def("component_lower_bound", [](const DemandGraph& g) { return lower_bound(g).component_sum; },
        py::arg("graph"));
  m.def("components", [](const DemandGraph& g) { return weakly_connected_components(g).components; },
        py::arg("graph"));

  m.def("plan_singlehop", &plan_singlehop, py::arg("graph"));
  m.def("plan_coordinator", &plan_coordinator, py::arg("graph"));
  m.def("plan_cycle", &plan_cycle, py::arg("graph"));
  m.def("optimal_multihop",
        [](const DemandGraph& g, std::size_t a, std::size_t b, double c, std::uint64_t d) {
          return optimal_multihop(g, make_limits(a, b, c, d));
        },
        py::arg("graph"), PIGEONPOST_LIMIT_ARGS);
  m.def("optimal_twohop",
        [](const DemandGraph& g, std::size_t a, std::size_t b, double c, std::uint64_t d) {
          return optimal_twohop(g, make_limits(a, b, c, d));
        },
        py::arg("graph"), PIGEONPOST_LIMIT_ARGS);
  m.def("solve_ilp",
        [](const DemandGraph& g, const std::string& mode, double time_budget, std::uint64_t node_budget) {
          const RoutingMode rm = mode_of(mode);
          SearchLimits l;
          l.time_budget_seconds = time_budget;
          l.node_budget = node_budget;
          if (rm == RoutingMode::twohop) return ilp::solve_twohop_ilp(g, l);
          if (rm == RoutingMode::multihop) return ilp::solve_multihop_ilp(g, l);
          throw InputError("the ILP models cover twohop and multihop only");
        },
        py::arg("graph"), py::arg("mode"), py::arg("time_budget") = SearchLimits{}.time_budget_seconds,
        py::arg("node_budget") = SearchLimits{}.node_budget);
  m.def("certify", &certify, py::arg("graph"), py::arg("result"));

  m.def("verify",
        [](const DemandGraph& g, const std::vector<Pair>& flights, const std::string& mode) {
          return verify(mode_of(mode), g, make_plan(flights)).satisfied;
        },
        py::arg("graph"), py::arg("flights"), py::arg("mode"));
  m.def("verify_report",
        [](const DemandGraph& g, const std::vector<Pair>& flights, const std::string& mode) {
          return json::dump(json::to_json(verify(mode_of(mode), g, make_plan(flights))));
        },
        py::arg("graph"), py::arg("flights"), py::arg("mode"));

  m.def("export_lp",
        [](const DemandGraph& g, const std::string& mode) {
          const RoutingMode rm = mode_of(mode);
          if (rm == RoutingMode::twohop) return ilp::export_lp(ilp::build_twohop_model(g));
          if (rm == RoutingMode::multihop) {
            return ilp::export_lp(ilp::merge_models(ilp::build_multihop_models(g)));
          }
          throw InputError("the ILP models cover twohop and multihop only");
        },
        py::arg("graph"), py::arg("mode"));

  m.def("reduce_vertex_cover",
        [](std::size_t n, const std::vector<Pair>& edges, std::size_t k) {
          const ReductionOutput r = reduce_vertex_cover_to_multihop(UndirectedGraph(n, edges), k);
          return py::make_tuple(r.graph, r.budget);
        },
        py::arg("n"), py::arg("edges"), py::arg("k"));
  m.def("reduce_3sat",
        [](const std::string& dimacs) {
          const ReductionOutput r = reduce_3sat_to_twohop(parse_dimacs_cnf(dimacs));
          return py::make_tuple(r.graph, r.budget);
        },
        py::arg("dimacs"));
  m.def("min_vertex_cover",
        [](std::size_t n, const std::vector<Pair>& edges) {
          return min_vertex_cover_bruteforce(UndirectedGraph(n, edges));
        },
        py::arg("n"), py::arg("edges"));

  m.def("generate",
        [](const std::string& kind, std::size_t n, double p, std::uint64_t seed) {
          if (kind == "cycle") return gen::cycle(n);
          if (kind == "star") return gen::star(n);
          if (kind == "complete") return gen::complete(n);
          if (kind == "hub6") return gen::hub6();
          if (kind == "random") return gen::random(n, p, seed);
          throw InputError("unknown generator \"" + kind + "\"");
        },
        py::arg("kind"), py::arg("n") = 0, py::arg("p") = 0.5, py::arg("seed") = 1);
}
