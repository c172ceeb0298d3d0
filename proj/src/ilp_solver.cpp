#include <algorithm>
#include <chrono>
#include <limits>
#include <numeric>

#include "pigeonpost/error.hpp"
#include "pigeonpost/ilp.hpp"

namespace pigeonpost::ilp {

std::string_view to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::optimal: return "optimal";
    case SolveStatus::feasible: return "feasible";
    case SolveStatus::infeasible: return "infeasible";
    case SolveStatus::budget_exhausted: return "budget_exhausted";
  }
  return "unknown";
}

bool is_feasible(const BinaryModel& model, const std::vector<std::uint8_t>& values) {
  if (values.size() != model.variables().size()) return false;
  for (const Constraint& c : model.constraints()) {
    std::int64_t activity = 0;
    for (const Term& t : c.terms) activity += t.coef * values[t.var];
    switch (c.relation) {
      case Relation::less_equal:
        if (activity > c.rhs) return false;
        break;
      case Relation::equal:
        if (activity != c.rhs) return false;
        break;
      case Relation::greater_equal:
        if (activity < c.rhs) return false;
        break;
    }
  }
  return true;
}

namespace {

constexpr std::int64_t kMinusInf = std::numeric_limits<std::int64_t>::min() / 4;
constexpr std::int64_t kPlusInf = std::numeric_limits<std::int64_t>::max() / 4;
constexpr std::int8_t kFree = -1;

class BranchAndBound {
 public:
  BranchAndBound(const BinaryModel& model, const SearchLimits& limits)
      : model_(model),
        deadline_(std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(limits.time_budget_seconds))),
        node_budget_(limits.node_budget) {
    const std::size_t nvars = model.variables().size();
    value_.assign(nvars, kFree);
    columns_.resize(nvars);

    for (const Constraint& c : model.constraints()) {
      Row row{c.terms, kMinusInf, kPlusInf};
      if (c.relation != Relation::greater_equal) row.hi = c.rhs;
      if (c.relation != Relation::less_equal) row.lo = c.rhs;
      add_row(std::move(row));
    }
    add_compaction_rows();
    objective_row_ = rows_.size();
    add_row(Row{model.objective(), kMinusInf, kPlusInf});

    order_.resize(nvars);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return rank(a) < rank(b);
    });
  }

  Assignment run() {
    Assignment result;
    std::vector<std::size_t> all(rows_.size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    if (propagate(all)) dfs(0);

    result.nodes = nodes_;
    if (!best_.empty()) {
      result.values = best_;
      result.objective = best_objective_;
      result.status = stopped_ ? SolveStatus::feasible : SolveStatus::optimal;
    } else {
      result.status = stopped_ ? SolveStatus::budget_exhausted : SolveStatus::infeasible;
    }
    return result;
  }

 private:
  struct Row {
    std::vector<Term> terms;
    std::int64_t lo;
    std::int64_t hi;
    std::int64_t fixed = 0;
    std::int64_t pos_free = 0;  // sum of positive free coefficients
    std::int64_t neg_free = 0;  // sum of negative free coefficients
    std::int64_t max_abs = 0;   // largest |coefficient|
    bool queued = false;

    std::int64_t min_activity() const { return fixed + neg_free; }
    std::int64_t max_activity() const { return fixed + pos_free; }
  };

  struct Entry {
    std::size_t row;
    std::int64_t coef;
  };

  void add_row(Row row) {
    const std::size_t r = rows_.size();
    for (const Term& t : row.terms) {
      (t.coef > 0 ? row.pos_free : row.neg_free) += t.coef;
      row.max_abs = std::max(row.max_abs, t.coef > 0 ? t.coef : -t.coef);
      columns_[t.var].push_back({r, t.coef});
    }
    rows_.push_back(std::move(row));
  }

  // Symmetry-breaking rows known only to the solver; none of them changes the
  // optimum. Slot i+1 may only be used if slot i is: both models compare
  // slots by order alone, so compacting a solution keeps it feasible.
  void add_compaction_rows() {
    if (model_.kind() == ModelKind::generic || model_.slots() < 2) return;
    std::vector<std::vector<std::size_t>> by_slot(model_.slots() + 1);
    for (std::size_t k = 0; k < model_.variables().size(); ++k) {
      const Variable& v = model_.variables()[k];
      if (v.kind == VarKind::x && !v.indices.empty()) by_slot[v.indices.back()].push_back(k);
    }
    for (std::size_t i = 1; i < model_.slots(); ++i) {
      std::vector<Term> terms;
      for (std::size_t k : by_slot[i + 1]) terms.push_back({k, 1});
      for (std::size_t k : by_slot[i]) terms.push_back({k, -1});
      add_row(Row{std::move(terms), kMinusInf, 0});
    }
    if (model_.kind() == ModelKind::twohop) add_ordering_rows(by_slot);
  }

  // Adjacent 2-hop flights (a,b),(c,d) with b != c and d != a cannot be the
  // two legs of one relay, so swapping them keeps every delivery. Keep only
  // the order with the smaller flight first.
  void add_ordering_rows(const std::vector<std::vector<std::size_t>>& by_slot) {
    for (std::size_t i = 1; i < model_.slots(); ++i) {
      for (std::size_t f : by_slot[i]) {
        const auto& a = model_.variables()[f].indices;
        for (std::size_t g : by_slot[i + 1]) {
          const auto& c = model_.variables()[g].indices;
          const bool independent = a[1] != c[0] && c[1] != a[0];
          const bool descending = std::pair(c[0], c[1]) < std::pair(a[0], a[1]);
          if (independent && descending) add_row(Row{{{f, 1}, {g, 1}}, kMinusInf, 1});
        }
      }
    }
  }

  // x before y; within a kind, by slot (the last index of x, the third of y).
  std::pair<int, std::uint32_t> rank(std::size_t var) const {
    const Variable& v = model_.variables()[var];
    if (v.indices.empty() || model_.kind() == ModelKind::generic) return {0, 0};
    if (v.kind == VarKind::x) return {0, v.indices.back()};
    const std::size_t slot_pos = model_.kind() == ModelKind::twohop ? 3 : 2;
    return {1, v.indices.size() > slot_pos ? v.indices[slot_pos] : 0};
  }

  void fix(std::size_t var, std::int8_t val) {
    value_[var] = val;
    trail_.push_back(var);
    for (const Entry& e : columns_[var]) {
      Row& row = rows_[e.row];
      (e.coef > 0 ? row.pos_free : row.neg_free) -= e.coef;
      row.fixed += e.coef * val;
      // Fixing raises the row's minimum activity or lowers its maximum; only
      // the matching side can trigger anything.
      const bool raises_min = (e.coef > 0) == (val == 1);
      if (raises_min ? row.hi < kPlusInf : row.lo > kMinusInf) enqueue(e.row);
    }
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const std::size_t var = trail_.back();
      trail_.pop_back();
      const std::int8_t val = value_[var];
      for (const Entry& e : columns_[var]) {
        Row& row = rows_[e.row];
        (e.coef > 0 ? row.pos_free : row.neg_free) += e.coef;
        row.fixed -= e.coef * val;
      }
      value_[var] = kFree;
    }
  }

  void enqueue(std::size_t r) {
    if (!rows_[r].queued) {
      rows_[r].queued = true;
      queue_.push_back(r);
    }
  }

  void clear_queue() {
    for (std::size_t r : queue_) rows_[r].queued = false;
    queue_.clear();
  }

  // Bound propagation to a fixpoint. False on conflict.
  bool propagate(const std::vector<std::size_t>& seed) {
    for (std::size_t r : seed) enqueue(r);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const std::size_t r = queue_[head];
      rows_[r].queued = false;
      const Row& row = rows_[r];
      if (row.min_activity() > row.hi || row.max_activity() < row.lo) {
        clear_queue();
        return false;
      }
      if (row.min_activity() + row.max_abs <= row.hi && row.max_activity() - row.max_abs >= row.lo) {
        continue;  // no single fixing can reach either side
      }
      for (const Term& t : row.terms) {
        if (value_[t.var] != kFree) continue;
        const std::int64_t lo_act = row.min_activity();
        const std::int64_t hi_act = row.max_activity();
        if (t.coef > 0) {
          if (lo_act + t.coef > row.hi) {
            fix(t.var, 0);
          } else if (hi_act - t.coef < row.lo) {
            fix(t.var, 1);
          }
        } else {
          if (lo_act - t.coef > row.hi) {
            fix(t.var, 1);
          } else if (hi_act + t.coef < row.lo) {
            fix(t.var, 0);
          }
        }
        if (row.min_activity() > row.hi || row.max_activity() < row.lo) {
          clear_queue();
          return false;
        }
      }
    }
    queue_.clear();
    return true;
  }

  bool out_of_budget() {
    if (stopped_) return true;
    ++nodes_;
    if (nodes_ > node_budget_ ||
        ((nodes_ & 0xfff) == 0 && std::chrono::steady_clock::now() > deadline_)) {
      stopped_ = true;
    }
    return stopped_;
  }

  void dfs(std::size_t pos) {
    if (out_of_budget()) return;
    while (pos < order_.size() && value_[order_[pos]] != kFree) ++pos;
    if (pos == order_.size()) {
      const std::int64_t objective = rows_[objective_row_].fixed;
      if (best_.empty() || objective < best_objective_) {
        best_objective_ = objective;
        best_.assign(value_.begin(), value_.end());
        rows_[objective_row_].hi = objective - 1;
      }
      return;
    }
    const std::size_t var = order_[pos];
    for (const std::int8_t val : {std::int8_t{1}, std::int8_t{0}}) {
      const std::size_t mark = trail_.size();
      fix(var, val);
      if (propagate({objective_row_})) dfs(pos + 1);
      undo(mark);
      if (stopped_) return;
    }
  }

  const BinaryModel& model_;
  std::chrono::steady_clock::time_point deadline_;
  std::uint64_t node_budget_;
  std::vector<Row> rows_;
  std::vector<std::vector<Entry>> columns_;
  std::vector<std::int8_t> value_;
  std::vector<std::size_t> trail_;
  std::vector<std::size_t> queue_;
  std::vector<std::size_t> order_;
  std::size_t objective_row_ = 0;
  std::vector<std::uint8_t> best_;
  std::int64_t best_objective_ = 0;
  std::uint64_t nodes_ = 0;
  bool stopped_ = false;
};

}  // namespace

Assignment solve_binary_model(const BinaryModel& model, const SearchLimits& limits) {
  limits.validate();
  return BranchAndBound(model, limits).run();
}

FlightPlan extract_plan(const BinaryModel& model, const Assignment& assignment) {
  if (!assignment.has_solution()) throw InputError("assignment carries no solution");
  if (assignment.values.size() != model.variables().size()) {
    throw InputError("assignment does not match the model");
  }
  const std::size_t slots = model.slots();
  // Per slot: flight (2-hop) or node (multihop); -1 when empty.
  std::vector<std::vector<std::uint32_t>> occupied(slots + 1);
  for (std::size_t k = 0; k < model.variables().size(); ++k) {
    const Variable& v = model.variables()[k];
    if (v.kind != VarKind::x || assignment.values[k] == 0) continue;
    const std::uint32_t slot = v.indices.back();
    if (!occupied[slot].empty()) {
      throw InputError("slot " + std::to_string(slot) + " holds more than one " +
                       (model.kind() == ModelKind::twohop ? "flight" : "walk node"));
    }
    occupied[slot] = v.indices;
  }

  FlightPlan plan;
  if (model.kind() == ModelKind::twohop) {
    for (std::size_t i = 1; i <= slots; ++i) {
      if (!occupied[i].empty()) plan.push_back({occupied[i][0], occupied[i][1]});
    }
    return plan;
  }
  if (model.kind() != ModelKind::multihop) throw InputError("cannot extract a plan from a generic model");
  std::vector<NodeId> walk;
  for (std::size_t i = 1; i <= slots; ++i) {
    if (occupied[i].empty()) continue;
    const NodeId v = occupied[i][0];
    if (walk.empty() || walk.back() != v) walk.push_back(v);
  }
  for (std::size_t k = 0; k + 1 < walk.size(); ++k) plan.push_back({walk[k], walk[k + 1]});
  return plan;
}

PlannerResult solve_twohop_ilp(const DemandGraph& g, const SearchLimits& limits) {
  const BinaryModel model = build_twohop_model(g);
  const Assignment a = solve_binary_model(model, limits);

  PlannerResult r;
  r.mode = RoutingMode::twohop;
  r.algorithm = "ilp";
  r.expansions = a.nodes;
  if (a.has_solution()) {
    r.plan = extract_plan(model, a);
    r.proven_optimal = a.status == SolveStatus::optimal;
  } else {
    r.plan = plan_coordinator(g).plan;
  }
  finalize_result(g, r);
  return r;
}

PlannerResult solve_multihop_ilp(const DemandGraph& g, const SearchLimits& limits) {
  PlannerResult r;
  r.mode = RoutingMode::multihop;
  r.algorithm = "ilp";
  r.proven_optimal = true;
  for (const BinaryModel& model : build_multihop_models(g)) {
    const Assignment a = solve_binary_model(model, limits);
    r.expansions += a.nodes;
    if (a.has_solution()) {
      r.plan.append(extract_plan(model, a));
      r.proven_optimal = r.proven_optimal && a.status == SolveStatus::optimal;
    } else {
      // Rebuild the component graph from the model's x variables.
      std::vector<NodeId> nodes;
      for (const Variable& v : model.variables()) {
        if (v.kind == VarKind::x && v.indices[1] == 1) nodes.push_back(v.indices[0]);
      }
      const ComponentGraph component = induced_component(g, nodes);
      const PlannerResult hub = plan_coordinator(component.graph);
      for (const Flight& f : hub.plan.flights()) {
        r.plan.push_back({nodes[f.remote], nodes[f.home]});
      }
      r.proven_optimal = false;
    }
  }
  finalize_result(g, r);
  return r;
}

}  // namespace pigeonpost::ilp
