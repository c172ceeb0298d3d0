#include <algorithm>
#include <sstream>
#include <string>

#include "pigeonpost/error.hpp"
#include "pigeonpost/ilp.hpp"

namespace pigeonpost::ilp {

std::size_t BinaryModel::add_variable(std::string name, VarKind kind,
                                      std::vector<std::uint32_t> indices) {
  const std::size_t id = variables_.size();
  if (!index_.emplace(name, id).second) throw InputError("duplicate variable " + name);
  variables_.push_back({std::move(name), kind, std::move(indices)});
  return id;
}

void BinaryModel::add_constraint(std::string name, std::vector<Term> terms, Relation relation,
                                 std::int64_t rhs) {
  for (const Term& t : terms) {
    if (t.var >= variables_.size()) throw InputError("constraint " + name + " uses an unknown variable");
  }
  constraints_.push_back({std::move(name), std::move(terms), relation, rhs});
}

void BinaryModel::add_objective_term(std::size_t var, std::int64_t coef) {
  if (var >= variables_.size()) throw InputError("objective uses an unknown variable");
  objective_.push_back({var, coef});
}

std::optional<std::size_t> BinaryModel::find(const std::string& name) const {
  const auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t BinaryModel::count(VarKind kind) const {
  return static_cast<std::size_t>(std::count_if(
      variables_.begin(), variables_.end(), [kind](const Variable& v) { return v.kind == kind; }));
}

namespace {

std::string join_name(char prefix, std::initializer_list<std::uint32_t> parts) {
  std::string s(1, prefix);
  for (std::uint32_t p : parts) {
    s += '_';
    s += std::to_string(p);
  }
  return s;
}

std::string row_name(const char* prefix, std::initializer_list<std::uint32_t> parts) {
  std::string s(prefix);
  for (std::uint32_t p : parts) {
    s += '_';
    s += std::to_string(p);
  }
  return s;
}

}  // namespace

BinaryModel build_twohop_model(const DemandGraph& g) {
  const std::size_t n = g.node_count();
  if (n < 2 && !g.empty()) throw InputError("2-hop model needs at least two nodes");
  const std::size_t slots = n >= 2 ? 2 * n - 2 : 0;
  BinaryModel model(ModelKind::twohop, slots);

  constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);
  // x_id[(i-1) * n * n + u * n + v]
  std::vector<std::size_t> x_id(slots * n * n, kAbsent);
  auto x_at = [&](std::uint32_t u, std::uint32_t v, std::uint32_t i) {
    return x_id[(i - 1) * n * n + u * n + v];
  };

  for (std::uint32_t i = 1; i <= slots; ++i) {
    for (std::uint32_t u = 0; u < n; ++u) {
      for (std::uint32_t v = 0; v < n; ++v) {
        if (u == v) continue;
        const std::size_t id = model.add_variable(join_name('x', {u, v, i}), VarKind::x, {u, v, i});
        x_id[(i - 1) * n * n + u * n + v] = id;
        model.add_objective_term(id, 1);
      }
    }
  }

  const auto demands = g.demands();
  // y_id[((i-1) * |E| + e) * n + w]
  std::vector<std::size_t> y_id(slots * demands.size() * n);
  auto y_at = [&](std::size_t e, std::uint32_t w, std::uint32_t i) {
    return y_id[((i - 1) * demands.size() + e) * n + w];
  };
  for (std::uint32_t i = 1; i <= slots; ++i) {
    for (std::size_t e = 0; e < demands.size(); ++e) {
      const auto [u, v] = demands[e];
      for (std::uint32_t w = 0; w < n; ++w) {
        y_id[((i - 1) * demands.size() + e) * n + w] =
            model.add_variable(join_name('y', {u, w, v, i}), VarKind::y, {u, w, v, i});
      }
    }
  }

  for (std::uint32_t i = 1; i <= slots; ++i) {
    std::vector<Term> row;
    for (std::uint32_t u = 0; u < n; ++u) {
      for (std::uint32_t v = 0; v < n; ++v) {
        if (u != v) row.push_back({x_at(u, v, i), 1});
      }
    }
    model.add_constraint(row_name("slot", {i}), std::move(row), Relation::less_equal, 1);
  }

  for (std::size_t e = 0; e < demands.size(); ++e) {
    const auto [u, v] = demands[e];
    std::vector<Term> row;
    for (std::uint32_t i = 1; i <= slots; ++i) {
      row.push_back({x_at(u, v, i), 1});
      for (std::uint32_t w = 0; w < n; ++w) row.push_back({y_at(e, w, i), 1});
    }
    model.add_constraint(row_name("cover", {u, v}), std::move(row), Relation::greater_equal, 1);
  }

  for (std::size_t e = 0; e < demands.size(); ++e) {
    const auto [u, v] = demands[e];
    for (std::uint32_t w = 0; w < n; ++w) {
      for (std::uint32_t i = 1; i <= slots; ++i) {
        std::vector<Term> first{{y_at(e, w, i), 1}};
        if (w != u) first.push_back({x_at(u, w, i), -1});
        model.add_constraint(row_name("leg1", {u, w, v, i}), std::move(first),
                             Relation::less_equal, 0);

        std::vector<Term> second{{y_at(e, w, i), 1}};
        if (w != v) {
          for (std::uint32_t j = i + 1; j <= slots; ++j) second.push_back({x_at(w, v, j), -1});
        }
        model.add_constraint(row_name("leg2", {u, w, v, i}), std::move(second),
                             Relation::less_equal, 0);
      }
    }
  }
  return model;
}

BinaryModel build_multihop_model(const DemandGraph& g) {
  const ComponentPartition part = weakly_connected_components(g);
  if (part.size() > 1) {
    throw InputError("multihop model expects a weakly connected demand graph; got " +
                     std::to_string(part.size()) + " components");
  }
  if (part.size() == 0) {
    BinaryModel empty(ModelKind::multihop, 0);
    return empty;
  }
  const std::vector<NodeId>& nodes = part.components.front();
  const std::size_t m = nodes.size();
  const std::size_t slots = 2 * m;
  BinaryModel model(ModelKind::multihop, slots);
  model.set_components(1);

  std::vector<std::size_t> local(g.node_count(), 0);
  for (std::size_t k = 0; k < m; ++k) local[nodes[k]] = k;

  std::vector<std::size_t> x_id(slots * m);
  auto x_at = [&](NodeId v, std::uint32_t i) { return x_id[(i - 1) * m + local[v]]; };
  for (std::uint32_t i = 1; i <= slots; ++i) {
    for (NodeId v : nodes) {
      const std::size_t id = model.add_variable(join_name('x', {v, i}), VarKind::x, {v, i});
      x_id[(i - 1) * m + local[v]] = id;
      model.add_objective_term(id, 1);
    }
  }

  const auto demands = g.demands();
  std::vector<std::vector<std::size_t>> y_ids(demands.size());
  for (std::size_t e = 0; e < demands.size(); ++e) {
    const auto [u, v] = demands[e];
    for (std::uint32_t i = 1; i <= slots; ++i) {
      for (std::uint32_t j = i + 1; j <= slots; ++j) {
        y_ids[e].push_back(
            model.add_variable(join_name('y', {u, v, i, j}), VarKind::y, {u, v, i, j}));
      }
    }
  }

  for (std::uint32_t i = 1; i <= slots; ++i) {
    std::vector<Term> row;
    for (NodeId v : nodes) row.push_back({x_at(v, i), 1});
    model.add_constraint(row_name("pos", {i}), std::move(row), Relation::less_equal, 1);
  }
  for (std::size_t e = 0; e < demands.size(); ++e) {
    std::vector<Term> row;
    for (std::size_t id : y_ids[e]) row.push_back({id, 1});
    model.add_constraint(row_name("pick", {demands[e].src, demands[e].dst}), std::move(row),
                         Relation::equal, 1);
  }
  for (std::size_t e = 0; e < demands.size(); ++e) {
    const auto [u, v] = demands[e];
    std::size_t k = 0;
    for (std::uint32_t i = 1; i <= slots; ++i) {
      for (std::uint32_t j = i + 1; j <= slots; ++j) {
        model.add_constraint(row_name("link", {u, v, i, j}),
                             {{y_ids[e][k++], 2}, {x_at(u, i), -1}, {x_at(v, j), -1}},
                             Relation::less_equal, 0);
      }
    }
  }
  return model;
}

std::vector<BinaryModel> build_multihop_models(const DemandGraph& g) {
  const ComponentPartition part = weakly_connected_components(g);
  std::vector<BinaryModel> models;
  models.reserve(part.size());
  for (const auto& nodes : part.components) {
    std::vector<Demand> demands;
    for (const Demand& d : g.demands()) {
      if (part.component_of[d.src] == part.component_of[nodes.front()]) demands.push_back(d);
    }
    models.push_back(build_multihop_model(DemandGraph(g.node_count(), std::move(demands))));
  }
  return models;
}

BinaryModel merge_models(const std::vector<BinaryModel>& parts) {
  if (parts.size() == 1) return parts.front();
  ModelKind kind = parts.empty() ? ModelKind::generic : parts.front().kind();
  std::size_t slots = 0;
  for (const BinaryModel& p : parts) {
    slots = std::max(slots, p.slots());
    if (p.kind() != kind) kind = ModelKind::generic;
  }
  BinaryModel merged(kind, slots);
  std::size_t components = 0;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const BinaryModel& p = parts[k];
    const std::size_t offset = merged.variables().size();
    for (const Variable& v : p.variables()) merged.add_variable(v.name, v.kind, v.indices);
    for (const Term& t : p.objective()) merged.add_objective_term(t.var + offset, t.coef);
    const std::string prefix = "c" + std::to_string(k) + "_";
    for (const Constraint& c : p.constraints()) {
      std::vector<Term> terms = c.terms;
      for (Term& t : terms) t.var += offset;
      merged.add_constraint(prefix + c.name, std::move(terms), c.relation, c.rhs);
    }
    components += p.components();
  }
  merged.set_components(components);
  return merged;
}

namespace {

constexpr std::size_t kTermsPerLine = 8;

void write_terms(std::ostringstream& out, const BinaryModel& model, const std::vector<Term>& terms) {
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const Term& t = terms[k];
    if (k > 0 && k % kTermsPerLine == 0) out << "\n  ";
    const bool negative = t.coef < 0;
    const std::int64_t magnitude = negative ? -t.coef : t.coef;
    if (negative) {
      out << " - ";
    } else {
      out << (k == 0 ? " " : " + ");
    }
    if (magnitude != 1) out << magnitude << ' ';
    out << model.variables()[t.var].name;
  }
}

const char* relation_text(Relation r) {
  switch (r) {
    case Relation::less_equal: return "<=";
    case Relation::equal: return "=";
    case Relation::greater_equal: return ">=";
  }
  return "<=";
}

const char* kind_text(ModelKind k) {
  switch (k) {
    case ModelKind::twohop: return "twohop";
    case ModelKind::multihop: return "multihop";
    case ModelKind::generic: return "generic";
  }
  return "generic";
}

}  // namespace

std::string export_lp(const BinaryModel& model) {
  std::ostringstream out;
  out << "\\ pigeonpost " << kind_text(model.kind()) << " model: " << model.variables().size()
      << " binaries, " << model.constraints().size() << " constraints\n";
  out << "Minimize\n obj:";
  write_terms(out, model, model.objective());
  out << "\nSubject To\n";
  for (const Constraint& c : model.constraints()) {
    out << ' ' << c.name << ':';
    write_terms(out, model, c.terms);
    out << ' ' << relation_text(c.relation) << ' ' << c.rhs << '\n';
  }
  out << "Binary\n";
  for (const Variable& v : model.variables()) out << ' ' << v.name << '\n';
  out << "End\n";
  return out.str();
}

}  // namespace pigeonpost::ilp
