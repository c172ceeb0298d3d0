#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pigeonpost/demand_graph.hpp"
#include "pigeonpost/exact.hpp"
#include "pigeonpost/flight_plan.hpp"
#include "pigeonpost/planners.hpp"

namespace pigeonpost::ilp {

enum class Relation { less_equal, equal, greater_equal };

struct Term {
  std::size_t var = 0;
  std::int64_t coef = 0;
};

enum class VarKind : char { x = 'x', y = 'y' };

// Variable names follow a fixed grammar:
//   2-hop     x_<u>_<v>_<i>      pigeon i flies u -> v
//             y_<u>_<w>_<v>_<i>  demand (u,v) relayed at w, first leg is pigeon i
//   multihop  x_<v>_<i>          walk position i is node v
//             y_<u>_<v>_<i>_<j>  demand (u,v) picked up at position i, delivered at j
// Node ids are the demand graph's ids; slots and positions start at 1.
struct Variable {
  std::string name;
  VarKind kind = VarKind::x;
  std::vector<std::uint32_t> indices;
};

struct Constraint {
  std::string name;
  std::vector<Term> terms;
  Relation relation = Relation::less_equal;
  std::int64_t rhs = 0;
};

enum class ModelKind { generic, twohop, multihop };

/// 0/1 linear program, minimisation.
class BinaryModel {
 public:
  BinaryModel() = default;
  BinaryModel(ModelKind kind, std::size_t slots) : kind_(kind), slots_(slots) {}

  std::size_t add_variable(std::string name, VarKind kind, std::vector<std::uint32_t> indices);
  void add_constraint(std::string name, std::vector<Term> terms, Relation relation,
                      std::int64_t rhs);
  void add_objective_term(std::size_t var, std::int64_t coef);

  std::optional<std::size_t> find(const std::string& name) const;

  const std::vector<Variable>& variables() const noexcept { return variables_; }
  const std::vector<Constraint>& constraints() const noexcept { return constraints_; }
  const std::vector<Term>& objective() const noexcept { return objective_; }
  ModelKind kind() const noexcept { return kind_; }
  std::size_t slots() const noexcept { return slots_; }
  std::size_t count(VarKind kind) const;

  // Multihop models: one per weakly connected component.
  std::size_t components() const noexcept { return components_; }
  void set_components(std::size_t c) { components_ = c; }

 private:
  ModelKind kind_ = ModelKind::generic;
  std::size_t slots_ = 0;
  std::size_t components_ = 0;
  std::vector<Variable> variables_;
  std::vector<Constraint> constraints_;
  std::vector<Term> objective_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// 2-hop model over slots 1..2n-2:
///   per slot i:            sum_{u,v} x[u,v,i] <= 1
///   per demand (u,v):      sum_i (x[u,v,i] + sum_w y[u,w,v,i]) >= 1
///   per demand, w, i:      y[u,w,v,i] <= x[u,w,i]
///   per demand, w, i:      y[u,w,v,i] <= sum_{j>i} x[w,v,j]
/// minimise sum x. x is only declared for u != v; rows that would mention
/// x[u,u,.] keep an empty right-hand side and force y to 0.
BinaryModel build_twohop_model(const DemandGraph& g);

/// Multihop model of a connected demand graph (isolated nodes are ignored),
/// over walk positions 1..2m:
///   per position i:        sum_v x[v,i] <= 1
///   per demand (u,v):      sum_{i<j} y[u,v,i,j] = 1
///   per demand, i < j:     2 y[u,v,i,j] <= x[u,i] + x[v,j]
/// minimise sum x; the optimum is the pigeon count plus one.
/// Throws InputError if the demands span more than one component.
BinaryModel build_multihop_model(const DemandGraph& g);

/// One multihop model per weakly connected component.
std::vector<BinaryModel> build_multihop_models(const DemandGraph& g);

/// Disjoint union of models; row names get a "c<k>_" prefix.
BinaryModel merge_models(const std::vector<BinaryModel>& parts);

enum class SolveStatus { optimal, feasible, infeasible, budget_exhausted };

std::string_view to_string(SolveStatus status);

struct Assignment {
  SolveStatus status = SolveStatus::infeasible;
  std::vector<std::uint8_t> values;
  std::int64_t objective = 0;
  std::uint64_t nodes = 0;

  bool has_solution() const {
    return status == SolveStatus::optimal || status == SolveStatus::feasible;
  }
};

/// Depth-first 0/1 branch-and-bound with bound propagation on every row and
/// an objective cutoff row. Branches on x variables before y variables,
/// slot-major, trying 1 before 0.
Assignment solve_binary_model(const BinaryModel& model, const SearchLimits& limits = {});

/// True if `values` satisfies every row of `model`.
bool is_feasible(const BinaryModel& model, const std::vector<std::uint8_t>& values);

/// Flights (2-hop: one per x[u,v,i] = 1) or walk steps (multihop) in slot
/// order, empty slots dropped. Throws InputError when a slot holds more than
/// one flight or walk node.
FlightPlan extract_plan(const BinaryModel& model, const Assignment& assignment);

/// Builds, solves and extracts in one go. Multihop solves each component on
/// its own and adds up objective - 1 per component.
PlannerResult solve_twohop_ilp(const DemandGraph& g, const SearchLimits& limits = {});
PlannerResult solve_multihop_ilp(const DemandGraph& g, const SearchLimits& limits = {});

/// LP text format (Minimize / Subject To / Binary / End). Output depends only
/// on the model.
std::string export_lp(const BinaryModel& model);

}  // namespace pigeonpost::ilp
