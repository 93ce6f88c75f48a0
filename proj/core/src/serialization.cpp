#include "aluthge/serialization.hpp"

#include <fstream>
#include <sstream>

#include "aluthge/builders.hpp"
#include "aluthge/error.hpp"

namespace aluthge {

namespace {

Json grid_to_json(const std::vector<double>& v, std::size_t rows, std::size_t cols) {
  Json out = Json::array();
  for (std::size_t r = 0; r < rows; ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < cols; ++c) row.push_back(v[r * cols + c]);
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<double> grid_from_json(const Json& j, std::size_t rows, std::size_t cols,
                                   const char* name) {
  if (!j.is_array() || j.size() != rows) {
    throw ShapeError(std::string("table.") + name + " must have " + std::to_string(rows) +
                     " rows");
  }
  std::vector<double> v;
  v.reserve(rows * cols);
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != cols) {
      throw ShapeError(std::string("table.") + name + " rows must have " +
                       std::to_string(cols) + " entries");
    }
    for (const auto& x : row) v.push_back(x.get<double>());
  }
  return v;
}

bool omega_reproducible(const DiagramParams& p) { return p.omega && p.omega->reproducible(); }

Json point_json(LatticePoint k) { return Json::array({k.k1, k.k2}); }

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw DomainError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

Json table_to_json(const TableData& t) {
  return Json{{"rows", t.rows},
              {"cols", t.cols},
              {"tail", t.tail == TailRule::Flat ? "flat" : "none"},
              {"alpha", grid_to_json(t.alpha, t.rows, t.cols)},
              {"beta", grid_to_json(t.beta, t.rows, t.cols)}};
}

TableData table_from_json(const Json& j) {
  return guarded("table", [&] {
    TableData t;
    t.rows = j.at("rows").get<std::size_t>();
    t.cols = j.at("cols").get<std::size_t>();
    const std::string tail = j.value("tail", "flat");
    if (tail == "flat") {
      t.tail = TailRule::Flat;
    } else if (tail == "none") {
      t.tail = TailRule::None;
    } else {
      throw DomainError("table.tail must be \"flat\" or \"none\"");
    }
    t.alpha = grid_from_json(j.at("alpha"), t.rows, t.cols, "alpha");
    t.beta = grid_from_json(j.at("beta"), t.rows, t.cols, "beta");
    return t;
  });
}

Json diagram_to_json(const WeightDiagram& w, std::size_t window) {
  const DiagramParams& p = w.params();
  Json j;
  switch (w.kind()) {
    case DiagramKind::Table:
      if (p.table) {
        j["kind"] = "table";
        j["params"] = Json::object();
        j["table"] = table_to_json(*p.table);
        return j;
      }
      break;
    case DiagramKind::Theta:
      if (omega_reproducible(p)) {
        j["kind"] = "theta";
        j["params"] = {{"omega", p.omega->tag()}};
        return j;
      }
      break;
    case DiagramKind::Prop2:
      j["kind"] = "prop2";
      j["params"] = {{"x", p.x}, {"y", p.y}};
      return j;
    case DiagramKind::Thm1:
      if (omega_reproducible(p)) {
        j["kind"] = "thm1";
        j["params"] = {{"omega", p.omega->tag()}, {"y", p.y}};
        return j;
      }
      break;
    case DiagramKind::QuasinormalCompletion:
      if (omega_reproducible(p)) {
        j["kind"] = "quasinormal-completion";
        j["params"] = {{"row", p.omega->tag()}, {"constant", p.constant}, {"window", p.window}};
        return j;
      }
      break;
    case DiagramKind::Derived:
      break;
  }
  j["kind"] = "table";
  j["params"] = Json::object();
  if (!p.note.empty()) j["params"]["note"] = p.note;
  j["table"] = table_to_json(materialize(w, window));
  return j;
}

WeightDiagram diagram_from_json(const Json& j) {
  return guarded("diagram", [&] {
    const DiagramKind kind = diagram_kind_from_string(j.at("kind").get<std::string>());
    const Json params = j.value("params", Json::object());
    switch (kind) {
      case DiagramKind::Table:
        return build_table(table_from_json(j.at("table")));
      case DiagramKind::Theta:
        return build_theta(OneVarWeights::parse(params.at("omega").get<std::string>()));
      case DiagramKind::Prop2:
        return build_prop2(params.at("x").get<double>(), params.at("y").get<double>());
      case DiagramKind::Thm1:
        return build_thm1(OneVarWeights::parse(params.at("omega").get<std::string>()),
                          params.at("y").get<double>());
      case DiagramKind::QuasinormalCompletion:
        return quasinormal_completion(
            OneVarWeights::parse(params.at("row").get<std::string>()),
            params.at("constant").get<double>(),
            params.value("window", kDefaultCompletionWindow));
      case DiagramKind::Derived:
        break;
    }
    throw DomainError("derived diagrams are stored as tables; kind \"derived\" cannot be read");
  });
}

Json measure_to_json(const AtomicMeasure2D& mu) {
  Json atoms = Json::array();
  for (const Atom& a : mu.atoms()) atoms.push_back({{"s", a.s}, {"t", a.t}, {"rho", a.rho}});
  return Json{{"atoms", atoms}};
}

AtomicMeasure2D measure_from_json(const Json& j) {
  return guarded("measure", [&] {
    std::vector<Atom> atoms;
    for (const auto& a : j.at("atoms")) {
      atoms.push_back({a.at("s").get<double>(), a.at("t").get<double>(),
                       a.at("rho").get<double>()});
    }
    return AtomicMeasure2D(std::move(atoms));
  });
}

Json to_json(const PsdVerdict& v) {
  return Json{{"is_psd", v.is_psd},
              {"min_eigenvalue", v.min_eigenvalue},
              {"tolerance", v.tolerance},
              {"dimension", v.dimension},
              {"norm", v.norm}};
}

Json to_json(const HypoReport& r) {
  Json j{{"componentwise", {{"t1", r.componentwise.first}, {"t2", r.componentwise.second}}},
         {"joint", r.joint},
         {"joint_min_eigenvalue", r.joint_min_eigenvalue}};
  Json k = Json::object();
  for (const auto& [order, holds] : r.k_hypo) {
    const auto it = r.k_min_eigenvalue.find(order);
    k[std::to_string(order)] = {
        {"holds", holds},
        {"min_eigenvalue", it == r.k_min_eigenvalue.end() ? 0.0 : it->second}};
  }
  j["k_hypo"] = k;
  if (r.worst_witness) {
    const Witness& w = *r.worst_witness;
    Json m = Json::array();
    for (Eigen::Index i = 0; i < w.matrix.rows(); ++i) {
      Json row = Json::array();
      for (Eigen::Index c = 0; c < w.matrix.cols(); ++c) row.push_back(w.matrix(i, c));
      m.push_back(row);
    }
    j["worst_witness"] = {{"at", point_json(w.at)},
                          {"matrix", m},
                          {"min_eigenvalue", w.min_eigenvalue}};
  } else {
    j["worst_witness"] = nullptr;
  }
  return j;
}

Json to_json(const KHypoResult& r) {
  return Json{{"holds", r.holds}, {"verdict", to_json(r.verdict)}};
}

Json to_json(const ToralCondition& c) {
  return Json{{"holds", c.holds},
              {"alpha_residual", c.alpha_residual},
              {"beta_residual", c.beta_residual},
              {"worst", point_json(c.worst)},
              {"candidate_residual", c.candidate_residual},
              {"candidate_commutes", c.candidate_commutes}};
}

Json to_json(const ContinuityProbe& p) {
  static constexpr const char* kLabels[] = {"i", "ii", "iii", "iv", "v"};
  Json bounds = Json::object();
  for (std::size_t i = 0; i < p.bounds.size(); ++i) {
    bounds[kLabels[i]] = {{"lhs", p.bounds[i].lhs},
                          {"rhs", p.bounds[i].rhs},
                          {"slack", p.bounds[i].slack()}};
  }
  return Json{{"n", p.n}, {"level", p.level}, {"min_slack", p.min_slack()},
              {"lemma_re4", bounds}};
}

Json to_json(const StampfliData& d) {
  return Json{{"a", d.a},       {"b", d.b},       {"c", d.c},     {"phi0", d.phi0},
              {"phi1", d.phi1}, {"s0", d.s0},     {"s1", d.s1},   {"rho0", d.rho0},
              {"rho1", d.rho1}};
}

Json to_json(const QuasinormalVerdict& v) {
  Json j{{"quasinormal", v.quasinormal},
         {"spherical_isometry", v.spherical_isometry},
         {"fixed_point", v.fixed_point},
         {"constant_diagonal", v.constant_diagonal}};
  j["constant"] = v.constant ? Json(*v.constant) : Json(nullptr);
  return j;
}

Json to_json(const Thm1ProbeReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"m", row.m},
                    {"n", row.n},
                    {"weight_moment", row.weight_moment},
                    {"diagonal_moment", row.diagonal_moment},
                    {"ratio", row.ratio},
                    {"predicted_sqrt", row.predicted_sqrt},
                    {"predicted_square", row.predicted_square}});
  }
  return Json{{"a", r.a},
              {"y", r.y},
              {"max_dev_sqrt", r.max_dev_sqrt},
              {"max_dev_square", r.max_dev_square},
              {"rows", rows}};
}

Json to_json(const RegionReport& r) {
  Json k = Json::object();
  for (const auto& [order, holds] : r.khypo) k[std::to_string(order)] = holds;
  return Json{{"x", r.x},
              {"y", r.y},
              {"curves", {{"s", r.curves.s}, {"h", r.curves.h}, {"CA", r.curves.ca},
                          {"PA", r.curves.pa}}},
              {"closed_form",
               {{"subnormal_by_s", r.subnormal_by_s},
                {"hypo_by_h", r.hypo_by_h},
                {"toral_hypo_by_CA", r.toral_hypo_by_ca},
                {"spherical_hypo_by_PA", r.spherical_hypo_by_pa}}},
              {"numeric",
               {{"joint_hypo", r.joint_hypo},
                {"toral_hypo", r.toral_hypo},
                {"spherical_hypo", r.spherical_hypo},
                {"khypo", k}}},
              {"agreement", {{"h", r.agrees_h}, {"CA", r.agrees_ca}, {"PA", r.agrees_pa}}}};
}

Json read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open " + path);
  try {
    return Json::parse(f);
  } catch (const Json::parse_error& e) {
    throw IoError("cannot parse " + path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream f(path);
  if (!f) throw IoError("cannot open " + path + " for writing");
  f << j.dump(2) << '\n';
  if (!f) throw IoError("write to " + path + " failed");
}

}  // namespace aluthge
