#include "pigeonpost/reductions.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "pigeonpost/error.hpp"

namespace pigeonpost {

CnfFormula parse_dimacs_cnf(std::string_view text) {
  std::istringstream in{std::string(text)};
  CnfFormula f;
  bool have_header = false;
  std::size_t declared_clauses = 0;
  std::vector<int> pending;
  std::string line;
  std::size_t line_no = 0;

  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == 'c') continue;
    if (line[first] == '%') break;
    std::istringstream tokens(line);
    if (line[first] == 'p') {
      if (have_header) throw InputError("line " + std::to_string(line_no) + ": second header");
      std::string p, fmt;
      long long v = -1, c = -1;
      std::string extra;
      if (!(tokens >> p >> fmt >> v >> c) || p != "p" || fmt != "cnf" || v < 0 || c < 0 ||
          (tokens >> extra)) {
        throw InputError("line " + std::to_string(line_no) + ": malformed header, expected \"p cnf V C\"");
      }
      f.variables = static_cast<std::size_t>(v);
      declared_clauses = static_cast<std::size_t>(c);
      have_header = true;
      continue;
    }
    if (!have_header) throw InputError("line " + std::to_string(line_no) + ": clause before header");

    std::string token;
    while (tokens >> token) {
      char* end = nullptr;
      const long lit = std::strtol(token.c_str(), &end, 10);
      if (end == token.c_str() || *end != '\0') {
        throw InputError("line " + std::to_string(line_no) + ": bad literal \"" + token + "\"");
      }
      if (lit == 0) {
        if (pending.size() != 3) {
          throw InputError("line " + std::to_string(line_no) + ": clause has " +
                           std::to_string(pending.size()) + " literals, expected 3");
        }
        f.clauses.push_back({pending[0], pending[1], pending[2]});
        pending.clear();
        continue;
      }
      if (static_cast<std::size_t>(std::labs(lit)) > f.variables) {
        throw InputError("line " + std::to_string(line_no) + ": literal " + token +
                         " exceeds the declared " + std::to_string(f.variables) + " variables");
      }
      pending.push_back(static_cast<int>(lit));
    }
  }
  if (!have_header) throw InputError("missing \"p cnf V C\" header");
  if (!pending.empty()) throw InputError("last clause is not terminated by 0");
  if (f.clauses.size() != declared_clauses) {
    throw InputError("header declares " + std::to_string(declared_clauses) + " clauses, found " +
                     std::to_string(f.clauses.size()));
  }
  return f;
}

std::string to_dimacs(const CnfFormula& f) {
  std::ostringstream out;
  out << "p cnf " << f.variables << ' ' << f.clauses.size() << '\n';
  for (const auto& c : f.clauses) out << c[0] << ' ' << c[1] << ' ' << c[2] << " 0\n";
  return out.str();
}

UndirectedGraph::UndirectedGraph(std::size_t nodes, std::vector<std::pair<NodeId, NodeId>> edge_list)
    : n(nodes), edges(std::move(edge_list)) {
  for (auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw InputError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                       "} has an endpoint >= n=" + std::to_string(n));
    }
    if (u == v) throw InputError("self-loop at node " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

bool UndirectedGraph::connected() const {
  if (n <= 1) return true;
  std::vector<NodeId> parent(n);
  std::iota(parent.begin(), parent.end(), NodeId{0});
  auto find = [&](NodeId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t merges = 0;
  for (const auto& [u, v] : edges) {
    const NodeId a = find(u), b = find(v);
    if (a != b) {
      parent[std::max(a, b)] = std::min(a, b);
      ++merges;
    }
  }
  return merges + 1 == n;
}

UndirectedGraph parse_undirected_graph(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges")) {
    throw InputError("graph must be an object with keys \"n\" and \"edges\"");
  }
  if (!doc["n"].is_number_integer() || doc["n"].get<std::int64_t>() < 0) {
    throw InputError("\"n\" must be a non-negative integer");
  }
  if (!doc["edges"].is_array()) throw InputError("\"edges\" must be an array");
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer() ||
        e[0].get<std::int64_t>() < 0 || e[1].get<std::int64_t>() < 0) {
      throw InputError("each edge must be a pair [u, v] of non-negative integers");
    }
    edges.emplace_back(e[0].get<NodeId>(), e[1].get<NodeId>());
  }
  return UndirectedGraph(doc["n"].get<std::size_t>(), std::move(edges));
}

NodeId literal_node(std::size_t clauses, int literal) {
  const auto var = static_cast<std::size_t>(std::abs(literal));
  return static_cast<NodeId>(clauses + 2 * (var - 1) + (literal < 0 ? 1 : 0));
}

NodeId star_node(std::size_t clauses, std::size_t variables) {
  return static_cast<NodeId>(clauses + 2 * variables);
}

NodeId gadget_node(const ReductionOutput& r, std::size_t e, std::size_t arm, std::size_t j) {
  if (e >= r.forced_edges.size() || arm >= r.arms || j < 1 || j > 3) {
    throw InputError("gadget index out of range");
  }
  return static_cast<NodeId>(r.first_gadget + (e * r.arms + arm) * 3 + (j - 1));
}

namespace {

std::string literal_label(int literal) {
  return (literal < 0 ? "~x" : "x") + std::to_string(std::abs(literal));
}

void validate(const CnfFormula& f) {
  for (const auto& c : f.clauses) {
    for (int lit : c) {
      if (lit == 0 || static_cast<std::size_t>(std::abs(lit)) > f.variables) {
        throw InputError("literal " + std::to_string(lit) + " out of range");
      }
    }
  }
}

// Distinct literals of a clause, in first-occurrence order.
std::vector<int> distinct_literals(const std::array<int, 3>& clause) {
  std::vector<int> out;
  for (int lit : clause) {
    if (std::find(out.begin(), out.end(), lit) == out.end()) out.push_back(lit);
  }
  return out;
}

}  // namespace

ReductionOutput reduce_3sat_to_twohop(const CnfFormula& f) {
  validate(f);
  const std::size_t n = f.variables;
  const std::size_t m = f.clauses.size();
  const NodeId star = star_node(m, n);

  ReductionOutput r;
  r.arms = 2 * n + 4;
  r.first_gadget = star + 1;

  std::vector<Demand> demands;
  for (std::size_t c = 0; c < m; ++c) {
    const auto clause_node = static_cast<NodeId>(c);
    for (int lit : distinct_literals(f.clauses[c])) {
      r.forced_edges.push_back({clause_node, literal_node(m, lit)});
    }
    demands.push_back({clause_node, star});
  }
  for (std::size_t j = 1; j <= n; ++j) {
    const NodeId pos = literal_node(m, static_cast<int>(j));
    const NodeId neg = literal_node(m, -static_cast<int>(j));
    r.forced_edges.push_back({pos, neg});
    r.forced_edges.push_back({neg, pos});
    demands.push_back({pos, star});
    demands.push_back({neg, star});
  }
  demands.insert(demands.end(), r.forced_edges.begin(), r.forced_edges.end());

  const std::size_t node_count = r.first_gadget + r.forced_edges.size() * r.arms * 3;
  r.roles.resize(node_count);
  for (std::size_t c = 0; c < m; ++c) r.roles[c] = "c" + std::to_string(c + 1);
  for (std::size_t j = 1; j <= n; ++j) {
    r.roles[literal_node(m, static_cast<int>(j))] = literal_label(static_cast<int>(j));
    r.roles[literal_node(m, -static_cast<int>(j))] = literal_label(-static_cast<int>(j));
  }
  r.roles[star] = "star";

  for (std::size_t e = 0; e < r.forced_edges.size(); ++e) {
    const auto [a, b] = r.forced_edges[e];
    for (std::size_t i = 0; i < r.arms; ++i) {
      const NodeId u1 = gadget_node(r, e, i, 1);
      const NodeId u2 = gadget_node(r, e, i, 2);
      const NodeId u3 = gadget_node(r, e, i, 3);
      for (std::size_t j = 1; j <= 3; ++j) {
        r.roles[gadget_node(r, e, i, j)] =
            "u[" + std::to_string(e) + "," + std::to_string(i) + "," + std::to_string(j) + "]";
      }
      demands.insert(demands.end(), {{u1, u2}, {u1, u3}, {u2, u3}, {u2, a}, {u3, a}, {u3, b}});
    }
  }

  // One pigeon per forced edge, one per variable towards the star and three
  // per gadget arm. Without repeated literals this is 12n^2+18nm+27n+39m.
  r.budget = r.forced_edges.size() + n + r.forced_edges.size() * r.arms * 3;
  r.graph = DemandGraph(node_count, std::move(demands));
  return r;
}

FlightPlan twohop_witness_plan(const CnfFormula& f, const ReductionOutput& r,
                               const std::vector<bool>& assignment) {
  validate(f);
  const std::size_t n = f.variables;
  const std::size_t m = f.clauses.size();
  if (assignment.size() != n) throw InputError("assignment size does not match the formula");
  auto is_true = [&](int lit) { return assignment[std::abs(lit) - 1] == (lit > 0); };
  for (const auto& clause : f.clauses) {
    if (std::none_of(clause.begin(), clause.end(), is_true)) {
      throw InputError("assignment does not satisfy the formula");
    }
  }

  FlightPlan plan;
  // Gadget arms first: u1 -> u2 -> u3 -> a, so that (u3, b) can still ride
  // the forced pigeon a -> b later.
  for (std::size_t e = 0; e < r.forced_edges.size(); ++e) {
    const NodeId a = r.forced_edges[e].src;
    for (std::size_t i = 0; i < r.arms; ++i) {
      plan.push_back({gadget_node(r, e, i, 1), gadget_node(r, e, i, 2)});
      plan.push_back({gadget_node(r, e, i, 2), gadget_node(r, e, i, 3)});
      plan.push_back({gadget_node(r, e, i, 3), a});
    }
  }
  // Forced edges in their listed order: clause -> literal, then the
  // x_j <-> ~x_j pairs.
  for (const Demand& d : r.forced_edges) plan.push_back({d.src, d.dst});
  // Each true literal carries its own and its partner's message to the star;
  // clauses reach it through one of their true literals.
  const NodeId star = star_node(m, n);
  for (std::size_t j = 1; j <= n; ++j) {
    const int lit = assignment[j - 1] ? static_cast<int>(j) : -static_cast<int>(j);
    plan.push_back({literal_node(m, lit), star});
  }
  return plan;
}

ReductionOutput reduce_vertex_cover_to_multihop(const UndirectedGraph& g, std::size_t k) {
  if (g.edges.empty()) throw InputError("vertex cover reduction needs at least one edge");
  if (!g.connected()) throw InputError("vertex cover reduction needs a connected graph");
  std::vector<Demand> demands;
  demands.reserve(2 * g.edges.size());
  for (const auto& [u, v] : g.edges) {
    demands.push_back({u, v});
    demands.push_back({v, u});
  }
  ReductionOutput r;
  r.graph = DemandGraph(g.n, std::move(demands));
  r.budget = g.n + k - 1;
  r.roles.reserve(g.n);
  for (std::size_t v = 0; v < g.n; ++v) r.roles.push_back("v" + std::to_string(v));
  return r;
}

SatResult sat_bruteforce(const CnfFormula& f) {
  validate(f);
  const std::size_t n = f.variables;
  if (n > kMaxBruteforceVariables) {
    throw InputError("sat_bruteforce supports at most " + std::to_string(kMaxBruteforceVariables) +
                     " variables, got " + std::to_string(n));
  }
  // Variable j (1-based) is bit n - j, so counting upwards enumerates
  // assignments with variable 1 most significant.
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    auto value = [&](int lit) {
      const bool v = (bits >> (n - static_cast<std::size_t>(std::abs(lit)))) & 1U;
      return lit > 0 ? v : !v;
    };
    const bool ok = std::all_of(f.clauses.begin(), f.clauses.end(), [&](const auto& c) {
      return value(c[0]) || value(c[1]) || value(c[2]);
    });
    if (ok) {
      SatResult r{true, std::vector<bool>(n)};
      for (std::size_t j = 1; j <= n; ++j) r.witness[j - 1] = (bits >> (n - j)) & 1U;
      return r;
    }
  }
  return {};
}

std::size_t min_vertex_cover_bruteforce(const UndirectedGraph& g) {
  if (g.n > kMaxBruteforceNodes) {
    throw InputError("min_vertex_cover_bruteforce supports at most " +
                     std::to_string(kMaxBruteforceNodes) + " nodes, got " + std::to_string(g.n));
  }
  std::size_t best = g.n;
  for (std::uint32_t set = 0; set < (std::uint32_t{1} << g.n); ++set) {
    const auto size = static_cast<std::size_t>(std::popcount(set));
    if (size >= best) continue;
    const bool covers = std::all_of(g.edges.begin(), g.edges.end(), [&](const auto& e) {
      return ((set >> e.first) & 1U) || ((set >> e.second) & 1U);
    });
    if (covers) best = size;
  }
  return best;
}

}  // namespace pigeonpost
