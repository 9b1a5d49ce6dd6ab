#include "stybe/json_io.hpp"

#include <fstream>

#include "stybe/errors.hpp"

namespace stybe {

namespace {

// Runs a reader, turning library type errors into StructuralError.
template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw StructuralError(std::string(what) + ": " + e.what());
  }
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw StructuralError(std::string("missing field '") + key + "'");
  return j.at(key);
}

int size_field(const Json& j) {
  const Json& s = field(j, "size");
  if (!s.is_number_integer() || s.get<int>() < 1)
    throw StructuralError("'size' must be a positive integer");
  return s.get<int>();
}

Json witness_json(const std::optional<Triple>& w) {
  return w ? Json(std::vector<int>(w->begin(), w->end())) : Json(nullptr);
}

Json constraint_json(const ConstraintCheck& c) {
  return Json{{"pass", c.pass}, {"witness", witness_json(c.witness)}};
}

Json checks_json(const std::vector<OrderCheck>& list) {
  Json a = Json::array();
  for (const auto& c : list) a.push_back(to_json(c));
  return a;
}

}  // namespace

Json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw StructuralError("invalid JSON in " + path.string() + ": " + e.what());
  }
}

Json to_json(const Table& t) { return t.rows(); }

Table table_from_json(const Json& rows, int n) {
  return guarded("table", [&] {
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
      throw StructuralError("table must have " + std::to_string(n) + " rows");
    std::vector<int> cells;
    for (const auto& row : rows) {
      if (!row.is_array() || static_cast<int>(row.size()) != n)
        throw StructuralError("table rows must have " + std::to_string(n) + " entries");
      for (const auto& v : row) {
        if (!v.is_number_integer()) throw StructuralError("table entries must be integers");
        cells.push_back(v.get<int>());
      }
    }
    return Table(n, std::move(cells));
  });
}

Json to_json(const NearBrace& nb) {
  return Json{{"size", nb.size()},
              {"add", to_json(nb.add)},
              {"mul", to_json(nb.mul)},
              {"kind", std::string(to_string(nb.kind))}};
}

NearBrace near_brace_from_json(const Json& j) {
  const int n = size_field(j);
  StructureKind kind = StructureKind::near_brace;
  if (j.contains("kind")) kind = parse_structure_kind(guarded("kind", [&] {
    return j.at("kind").get<std::string>();
  }));
  return NearBrace(table_from_json(field(j, "add"), n), table_from_json(field(j, "mul"), n),
                   kind);
}

RingTable ring_from_json(const Json& j) {
  const int n = size_field(j);
  return RingTable(table_from_json(field(j, "add"), n), table_from_json(field(j, "times"), n));
}

GroupTable group_from_json(const Json& rows, int n) {
  const auto g = GroupTable::from_table(table_from_json(rows, n));
  if (!g) throw StructuralError("multiplication table is not a group");
  return *g;
}

Json to_json(const SetSolution& sol) {
  return Json{{"size", sol.size()}, {"sigma", to_json(sol.sigma)}, {"tau", to_json(sol.tau)}};
}

SetSolution solution_from_json(const Json& j) {
  const int n = size_field(j);
  return SetSolution(table_from_json(field(j, "sigma"), n), table_from_json(field(j, "tau"), n));
}

Json to_json(const ReflectionMap& k) {
  return Json{{"k", k.table}, {"bijective", k.bijective}, {"involutive", k.involutive}};
}

ReflectionMap reflection_from_json(const Json& j) {
  return guarded("reflection map", [&] {
    return ReflectionMap::from_table(field(j, "k").get<std::vector<int>>());
  });
}

Json to_json(const Poly& p) {
  Json j = Json::object();
  for (const auto& [e, c] : p.terms()) j[monomial_key(e)] = rational_string(c);
  return j;
}

Poly poly_from_json(const Json& j) {
  if (j.is_number_integer()) return Poly(j.get<long>());
  if (j.is_string()) return Poly(parse_rational(j.get<std::string>()));
  if (!j.is_object()) throw StructuralError("polynomial must be an object of monomials");
  Poly p;
  for (const auto& [key, value] : j.items()) {
    Rational c;
    if (value.is_number_integer())
      c = Rational(value.get<long>());
    else if (value.is_string())
      c = parse_rational(value.get<std::string>());
    else
      throw StructuralError("coefficient of '" + key + "' must be a string or integer");
    p.add_term(parse_monomial_key(key), c);
  }
  return p;
}

Json to_json(const PolyMatrix& m) {
  Json entries = Json::array();
  for (int r = 0; r < m.dim(); ++r)
    for (const auto& [c, p] : m.rows()[r]) entries.push_back(Json::array({r, c, to_json(p)}));
  return Json{{"dim", m.dim()}, {"slots", m.slots()}, {"entries", entries}};
}

PolyMatrix matrix_from_json(const Json& j) {
  return guarded("matrix", [&] {
    const int dim = field(j, "dim").get<int>();
    std::vector<int> slots = j.contains("slots") ? j.at("slots").get<std::vector<int>>()
                                                 : std::vector<int>{dim};
    PolyMatrix m(slots);
    if (m.dim() != dim) throw StructuralError("'dim' does not match the slot product");
    for (const auto& e : field(j, "entries")) {
      if (!e.is_array() || e.size() != 3)
        throw StructuralError("matrix entries are [row, col, poly]");
      const int r = e[0].get<int>(), c = e[1].get<int>();
      if (r < 0 || r >= dim || c < 0 || c >= dim)
        throw StructuralError("matrix entry out of range");
      m.add_to(r, c, poly_from_json(e[2]));
    }
    return m;
  });
}

Json to_json(const SeriesOperator& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coeffs) coeffs.push_back(to_json(c));
  return Json{{"depth", s.depth()}, {"slots", s.slots()}, {"exact", s.exact}, {"coeffs", coeffs}};
}

SeriesOperator series_from_json(const Json& j) {
  return guarded("series", [&] {
    SeriesOperator s;
    for (const auto& c : field(j, "coeffs")) s.coeffs.push_back(matrix_from_json(c));
    if (s.coeffs.empty()) throw StructuralError("series needs at least one coefficient");
    if (j.contains("depth") && j.at("depth").get<int>() != s.depth())
      throw StructuralError("'depth' does not match the number of coefficients");
    if (j.contains("slots")) {
      const auto slots = j.at("slots").get<std::vector<int>>();
      for (auto& c : s.coeffs) c = c.with_slots(slots);
    }
    s.exact = j.value("exact", false);
    s.validate();
    return s;
  });
}

Json to_json(const StructureReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) failures.push_back({{"axiom", f.axiom}, {"witness", f.witness}});
  Json derived = Json::object();
  for (const auto& [key, value] : r.derived)
    std::visit([&](const auto& v) { derived[key] = v; }, value);
  return Json{{"valid", r.valid}, {"failures", failures}, {"derived", derived}};
}

Json to_json(const BraidReport& r) {
  return Json{{"pass", r.pass()},
              {"direct", constraint_json(r.direct)},
              {"c1", constraint_json(r.c1)},
              {"c2", constraint_json(r.c2)},
              {"c3", constraint_json(r.c3)},
              {"agree", r.agree}};
}

Json to_json(const SolutionDiagnostics& d) {
  Json j{{"non_degenerate", d.non_degenerate},
         {"involutive", d.involutive},
         {"invertible", d.invertible},
         {"sigma_hat", d.sigma_hat ? to_json(*d.sigma_hat) : Json(nullptr)},
         {"tau_hat", d.tau_hat ? to_json(*d.tau_hat) : Json(nullptr)},
         {"hat_maps_bijective", d.hat_maps_bijective},
         {"ide1_ok", d.ide1_ok},
         {"mapzz2_form_ok", d.mapzz2_form_ok ? Json(*d.mapzz2_form_ok) : Json(nullptr)}};
  return j;
}

Json to_json(const AdditionReport& r) {
  return Json{{"add_table", to_json(r.add_table)},
              {"associative", r.associative},
              {"group", r.group},
              {"abelian", r.abelian},
              {"distributivity_ok", r.distributivity_ok},
              {"phi_table", r.phi_table},
              {"round_trip", r.round_trip}};
}

Json to_json(const ReflectionReport& r) {
  return Json{{"mode", std::string(to_string(r.mode))},
              {"pass", r.pass},
              {"witness", r.witness ? Json(std::vector<int>{(*r.witness)[0], (*r.witness)[1]})
                                    : Json(nullptr)}};
}

Json to_json(const EntryDiff& d) {
  return Json{{"row", d.row}, {"col", d.col}, {"lhs", to_json(d.lhs)}, {"rhs", to_json(d.rhs)}};
}

Json to_json(const PropertyCheck& c) {
  return Json{{"status", std::string(to_string(c.status))},
              {"scalar", c.scalar ? Json(c.scalar->to_string()) : Json(nullptr)},
              {"witness", c.witness ? to_json(*c.witness) : Json(nullptr)}};
}

Json to_json(const BasicProperties& b) {
  return Json{{"pass", b.pass()},
              {"constant_braid", to_json(b.constant_braid)},
              {"ybe", to_json(b.ybe)},
              {"unitarity", to_json(b.unitarity)},
              {"crossing_unitarity", to_json(b.crossing_unitarity)},
              {"transpose_symmetry", to_json(b.transpose_symmetry)}};
}

Json to_json(const TwistReport& t) {
  return Json{{"pass", t.pass()},
              {"F", to_json(t.twist.f)},
              {"G", to_json(t.twist.g)},
              {"F_invertible", t.twist.f_invertible},
              {"G_invertible", t.twist.g_invertible},
              {"r_check_conjugate", to_json(t.r_check_conjugate)},
              {"r_from_F", to_json(t.r_from_f)},
              {"r_from_G", to_json(t.r_from_g)},
              {"baxterized", to_json(t.baxterized)}};
}

Json to_json(const OrderCheck& c) {
  return Json{{"n", c.n},
              {"m", c.m},
              {"pass", c.pass},
              {"witness", c.witness ? to_json(*c.witness) : Json(nullptr)}};
}

Json to_json(const RttReport& r) {
  return Json{{"pass", r.pass()},
              {"matrix", checks_json(r.matrix)},
              {"component", checks_json(r.component)},
              {"component_agrees", r.component_agrees},
              {"fund2b_applicable", r.fund2b_applicable},
              {"fund2b_agrees", r.fund2b_agrees}};
}

Json to_json(const Dressed& d) {
  return Json{{"degree", d.degree},
              {"normalization", d.normalization},
              {"lambda_form", to_json(d.lambda_form)},
              {"mu_form", to_json(d.mu_form)},
              {"series", to_json(d.series())}};
}

Json to_json(const ReflectionEquationReport& r) {
  return Json{{"pass", r.pass},
              {"mode", r.constant_mode ? "constant" : "spectral"},
              {"witness", r.witness ? to_json(*r.witness) : Json(nullptr)}};
}

Json to_json(const ReflectionAlgebraReport& r) {
  return Json{{"pass", r.pass()},
              {"basic", checks_json(r.basic)},
              {"rela1", checks_json(r.rela1)},
              {"rela2", checks_json(r.rela2)},
              {"k0_scalar", r.k0_scalar},
              {"finite_subalgebra", r.finite_subalgebra}};
}

}  // namespace stybe
