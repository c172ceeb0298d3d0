#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pigeonpost/demand_graph.hpp"
#include "pigeonpost/error.hpp"
#include "pigeonpost/exact.hpp"
#include "pigeonpost/flight_plan.hpp"
#include "pigeonpost/generators.hpp"
#include "pigeonpost/ilp.hpp"
#include "pigeonpost/json_io.hpp"
#include "pigeonpost/planners.hpp"
#include "pigeonpost/reductions.hpp"

namespace {

using namespace pigeonpost;

enum Exit : int { kOk = 0, kUnsatisfied = 1, kUsage = 2, kParse = 3, kBudget = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

DemandGraph load_graph(const std::string& path) {
  DemandGraph g = parse_demand_graph(read_input(path));
  if (g.duplicates_dropped() > 0) {
    std::cerr << "warning: " << g.duplicates_dropped() << " duplicate demand(s) merged\n";
  }
  return g;
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw std::runtime_error("cannot write " + path);
}

RoutingMode require_mode(const std::string& text) {
  const auto mode = parse_routing_mode(text);
  if (!mode) throw UsageError("unknown mode \"" + text + "\" (singlehop, twohop, multihop)");
  return *mode;
}

struct LimitFlags {
  SearchLimits limits;

  void attach(CLI::App* cmd) {
    cmd->add_option("--max-nodes", limits.max_nodes, "Largest component (multihop) or active node set (twohop) searched exactly")
        ->capture_default_str();
    cmd->add_option("--max-demands", limits.max_demands, "Largest demand set searched exactly")
        ->capture_default_str();
    cmd->add_option("--max-walk-length", limits.max_walk_length, "Cap on plan length explored (0: no cap)")
        ->capture_default_str();
    cmd->add_option("--time-budget", limits.time_budget_seconds, "Seconds per search")
        ->capture_default_str();
    cmd->add_option("--node-budget", limits.node_budget, "Search nodes per search")
        ->capture_default_str();
  }

  void check() const {
    try {
      limits.validate();
    } catch (const InputError& e) {
      throw UsageError(e.what());
    }
  }
};

struct SolveCmd {
  std::string graph_path;
  std::string mode_text;
  std::string algorithm;
  std::string output = "-";
  bool certify_flag = false;
  bool report = false;
  bool strict = false;
  LimitFlags limits;

  int run() const {
    const RoutingMode mode = require_mode(mode_text);
    const std::string algo =
        algorithm.empty() ? (mode == RoutingMode::singlehop ? "direct" : "coordinator") : algorithm;
    const bool multi = mode != RoutingMode::singlehop;
    const bool valid = (algo == "direct" && !multi) ||
                       ((algo == "coordinator" || algo == "exact" || algo == "ilp") && multi) ||
                       (algo == "cycle" && mode == RoutingMode::multihop);
    if (!valid) {
      throw UsageError("algorithm \"" + algo + "\" does not apply to mode " +
                       std::string(to_string(mode)));
    }
    limits.check();

    const DemandGraph g = load_graph(graph_path);
    PlannerResult r;
    if (algo == "direct") {
      r = plan_singlehop(g);
    } else if (algo == "coordinator") {
      r = plan_coordinator(g);
      // The coordinator plan is also a valid multihop plan; report it under
      // the requested mode.
      r.mode = mode;
    } else if (algo == "cycle") {
      r = plan_cycle(g);
    } else if (algo == "exact") {
      r = mode == RoutingMode::twohop ? optimal_twohop(g, limits.limits)
                                      : optimal_multihop(g, limits.limits);
    } else {
      r = mode == RoutingMode::twohop ? ilp::solve_twohop_ilp(g, limits.limits)
                                      : ilp::solve_multihop_ilp(g, limits.limits);
    }

    json::json out = json::to_json(r);
    if (report) out["approximation"] = json::to_json(approximation_report(g, r));
    if (certify_flag) out["certificate"] = json::to_json(certify(g, r));
    write_output(output, json::dump(out));

    const bool searched = algo == "exact" || algo == "ilp";
    if (strict && searched && !r.proven_optimal) {
      std::cerr << "pigeonpost: search budget exhausted before optimality was proven\n";
      return kBudget;
    }
    return kOk;
  }
};

struct VerifyCmd {
  std::string graph_path;
  std::string plan_path;
  std::string mode_text;
  std::string output = "-";

  int run() const {
    const RoutingMode mode = require_mode(mode_text);
    const DemandGraph g = load_graph(graph_path);
    const FlightPlan plan = parse_flight_plan(read_input(plan_path));
    const VerificationReport report = verify(mode, g, plan);
    write_output(output, json::dump(json::to_json(report)));
    return report.satisfied ? kOk : kUnsatisfied;
  }
};

struct BoundsCmd {
  std::string graph_path;
  std::string output = "-";

  int run() const {
    const DemandGraph g = load_graph(graph_path);
    write_output(output, json::dump(json::bounds_json(g)));
    return kOk;
  }
};

std::vector<bool> parse_assignment(const std::string& text, std::size_t variables) {
  std::vector<bool> out;
  for (char c : text) {
    if (c == 'T' || c == 't' || c == '1') {
      out.push_back(true);
    } else if (c == 'F' || c == 'f' || c == '0') {
      out.push_back(false);
    } else if (c != ',' && c != ' ') {
      throw UsageError("assignment may only contain T/F or 1/0");
    }
  }
  if (out.size() != variables) {
    throw UsageError("assignment has " + std::to_string(out.size()) + " values, formula has " +
                     std::to_string(variables) + " variables");
  }
  return out;
}

struct ReduceCmd {
  std::string kind;
  std::string input;
  std::optional<std::size_t> k;
  bool witness = false;
  std::string assignment;
  std::string output = "-";

  int run() const {
    if (kind == "vc-to-multihop") {
      if (!k) throw UsageError("vc-to-multihop needs --k");
      if (witness || !assignment.empty()) throw UsageError("--witness applies to 3sat-to-twohop only");
      const UndirectedGraph g = parse_undirected_graph(read_input(input));
      write_output(output, json::dump(json::to_json(reduce_vertex_cover_to_multihop(g, *k), kind)));
      return kOk;
    }
    if (kind != "3sat-to-twohop") {
      throw UsageError("unknown reduction \"" + kind + "\" (3sat-to-twohop, vc-to-multihop)");
    }
    if (k) throw UsageError("--k applies to vc-to-multihop only");
    const CnfFormula f = parse_dimacs_cnf(read_input(input));
    const ReductionOutput r = reduce_3sat_to_twohop(f);
    json::json out = json::to_json(r, kind);
    if (witness || !assignment.empty()) {
      std::vector<bool> values;
      if (!assignment.empty()) {
        values = parse_assignment(assignment, f.variables);
      } else {
        const SatResult sat = sat_bruteforce(f);
        if (!sat.satisfiable) throw InputError("formula is unsatisfiable; no witness plan exists");
        values = sat.witness;
      }
      out["witness_assignment"] = values;
      out["witness_plan"] = json::to_json(twohop_witness_plan(f, r, values))["flights"];
    }
    write_output(output, json::dump(out));
    return kOk;
  }
};

struct ExportCmd {
  std::string graph_path;
  std::string mode_text;
  std::string output = "-";

  int run() const {
    const RoutingMode mode = require_mode(mode_text);
    if (mode == RoutingMode::singlehop) throw UsageError("export-lp supports twohop and multihop");
    const DemandGraph g = load_graph(graph_path);
    const ilp::BinaryModel model = mode == RoutingMode::twohop
                                       ? ilp::build_twohop_model(g)
                                       : ilp::merge_models(ilp::build_multihop_models(g));
    write_output(output, ilp::export_lp(model));
    return kOk;
  }
};

struct GenCmd {
  std::string kind;
  std::size_t n = 0;
  double p = 0.5;
  std::uint64_t seed = 1;
  std::string output = "-";

  int run() const {
    std::string text;
    try {
      if (kind == "cycle") {
        text = json::dump(json::to_json(gen::cycle(n)));
      } else if (kind == "star") {
        text = json::dump(json::to_json(gen::star(n)));
      } else if (kind == "complete") {
        text = json::dump(json::to_json(gen::complete(n)));
      } else if (kind == "hub6") {
        text = json::dump(json::to_json(gen::hub6()));
      } else if (kind == "random") {
        text = json::dump(json::to_json(gen::random(n, p, seed)));
      } else if (kind == "random-connected") {
        text = json::dump(json::to_json(gen::random_connected(n, p, seed)));
      } else if (kind == "vc-example") {
        text = json::dump(json::to_json(gen::vc_example()));
      } else if (kind == "sat-example") {
        text = to_dimacs(gen::sat_example());
      } else {
        throw UsageError("unknown generator \"" + kind + "\"");
      }
    } catch (const InputError& e) {
      throw UsageError(e.what());
    }
    write_output(output, text);
    return kOk;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pigeon-post network design: plan, verify and bound pigeon flights"};
  app.require_subcommand(1);

  SolveCmd solve;
  auto* solve_cmd = app.add_subcommand("solve", "Compute a flight plan");
  solve_cmd->add_option("graph", solve.graph_path, "Demand graph JSON (- for stdin)")->required();
  solve_cmd->add_option("--mode", solve.mode_text, "singlehop, twohop or multihop")->required();
  solve_cmd->add_option("--algorithm", solve.algorithm,
                        "direct (singlehop); coordinator, exact, ilp (twohop, multihop); cycle (multihop)");
  solve_cmd->add_flag("--certify", solve.certify_flag, "Attach an independent certificate");
  solve_cmd->add_flag("--report", solve.report, "Attach the approximation report");
  solve_cmd->add_flag("--strict", solve.strict, "Exit 4 when a search stops before proving optimality");
  solve_cmd->add_option("-o,--output", solve.output, "Output path (- for stdout)")->capture_default_str();
  solve.limits.attach(solve_cmd);

  VerifyCmd verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Check a plan against a demand graph");
  verify_cmd->add_option("graph", verify_args.graph_path, "Demand graph JSON")->required();
  verify_cmd->add_option("plan", verify_args.plan_path, "Plan JSON with a \"flights\" array")->required();
  verify_cmd->add_option("--mode", verify_args.mode_text, "singlehop, twohop or multihop")->required();
  verify_cmd->add_option("-o,--output", verify_args.output, "Output path (- for stdout)")->capture_default_str();

  BoundsCmd bounds;
  auto* bounds_cmd = app.add_subcommand("bounds", "Degree profile, components and lower bounds");
  bounds_cmd->add_option("graph", bounds.graph_path, "Demand graph JSON")->required();
  bounds_cmd->add_option("-o,--output", bounds.output, "Output path (- for stdout)")->capture_default_str();

  ReduceCmd reduce;
  auto* reduce_cmd = app.add_subcommand("reduce", "Build a hardness reduction instance");
  reduce_cmd->add_option("kind", reduce.kind, "3sat-to-twohop or vc-to-multihop")->required();
  reduce_cmd->add_option("input", reduce.input, "DIMACS cnf or undirected graph JSON")->required();
  reduce_cmd->add_option("--k", reduce.k, "Vertex cover budget");
  reduce_cmd->add_flag("--witness", reduce.witness, "Attach a budget-meeting plan (3sat-to-twohop)");
  reduce_cmd->add_option("--assignment", reduce.assignment, "Satisfying assignment for the witness, e.g. TFTFF");
  reduce_cmd->add_option("-o,--output", reduce.output, "Output path (- for stdout)")->capture_default_str();

  ExportCmd export_args;
  auto* export_cmd = app.add_subcommand("export-lp", "Write the ILP model in LP format");
  export_cmd->add_option("graph", export_args.graph_path, "Demand graph JSON")->required();
  export_cmd->add_option("--mode", export_args.mode_text, "twohop or multihop")->required();
  export_cmd->add_option("-o,--output", export_args.output, "Output path (- for stdout)")->capture_default_str();

  GenCmd gen_args;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance");
  gen_cmd->add_option("kind", gen_args.kind,
                      "cycle, star, complete, hub6, random, random-connected, vc-example, sat-example")
      ->required();
  gen_cmd->add_option("--n", gen_args.n, "Node count");
  gen_cmd->add_option("--p", gen_args.p, "Edge probability")->capture_default_str();
  gen_cmd->add_option("--seed", gen_args.seed, "Random seed")->capture_default_str();
  gen_cmd->add_option("-o,--output", gen_args.output, "Output path (- for stdout)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*solve_cmd) return solve.run();
    if (*verify_cmd) return verify_args.run();
    if (*bounds_cmd) return bounds.run();
    if (*reduce_cmd) return reduce.run();
    if (*export_cmd) return export_args.run();
    if (*gen_cmd) return gen_args.run();
  } catch (const UsageError& e) {
    std::cerr << "pigeonpost: " << e.what() << '\n';
    return kUsage;
  } catch (const InputError& e) {
    std::cerr << "pigeonpost: " << e.what() << '\n';
    return kParse;
  } catch (const std::exception& e) {
    std::cerr << "pigeonpost: " << e.what() << '\n';
    return kParse;
  }
  return kUsage;
}
