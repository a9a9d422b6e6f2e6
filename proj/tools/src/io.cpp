#include "hexmetric_cli/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

namespace hexmetric::cli {

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_json_file(const std::string& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << doc.dump(2) << '\n';
}

namespace {

int as_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw InputError(where + " must be an integer");
  return v.get<int>();
}

SlotRef as_slot(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 2) throw InputError(where + " must be [hex, pos]");
  return SlotRef{as_int(v[0], where + "[0]"), as_int(v[1], where + "[1]")};
}

}  // namespace

ComplexSpec parse_triangulation(const json& doc) {
  if (!doc.is_object()) throw InputError("triangulation must be a JSON object");
  if (!doc.contains("hexagons")) throw InputError("triangulation lacks \"hexagons\"");
  if (!doc.contains("gluings") || !doc["gluings"].is_array()) {
    throw InputError("triangulation lacks a \"gluings\" array");
  }
  ComplexSpec spec;
  spec.hexagons = as_int(doc["hexagons"], "hexagons");
  for (std::size_t i = 0; i < doc["gluings"].size(); ++i) {
    const json& g = doc["gluings"][i];
    const std::string where = "gluings[" + std::to_string(i) + "]";
    if (!g.is_object() || !g.contains("a") || !g.contains("b")) {
      throw InputError(where + " must have \"a\" and \"b\"");
    }
    Gluing gl;
    gl.a = as_slot(g["a"], where + ".a");
    gl.b = as_slot(g["b"], where + ".b");
    if (g.contains("reversed")) {
      if (!g["reversed"].is_boolean()) throw InputError(where + ".reversed must be a boolean");
      gl.reversed = g["reversed"].get<bool>();
    }
    spec.gluings.push_back(gl);
  }
  if (doc.contains("labels")) {
    const json& labels = doc["labels"];
    if (!labels.is_array()) throw InputError("labels must be an array of strings");
    for (const json& l : labels) {
      if (!l.is_string()) throw InputError("labels must be an array of strings");
      spec.labels.push_back(l.get<std::string>());
    }
  }
  return spec;
}

json triangulation_json(const ComplexSpec& spec) {
  json doc;
  doc["hexagons"] = spec.hexagons;
  doc["gluings"] = json::array();
  for (const Gluing& g : spec.gluings) {
    doc["gluings"].push_back(
        {{"a", {g.a.hex, g.a.pos}}, {"b", {g.b.hex, g.b.pos}}, {"reversed", g.reversed}});
  }
  if (!spec.labels.empty()) doc["labels"] = spec.labels;
  return doc;
}

HexComplex load_complex(const std::string& path) {
  return HexComplex::build(parse_triangulation(read_json_file(path)));
}

std::vector<double> parse_coords(const json& doc, const HexComplex& cx, const std::string& member) {
  const json* map = &doc;
  if (doc.is_object() && doc.contains(member) && doc[member].is_object()) map = &doc[member];
  if (!map->is_object()) throw InputError("coordinate file must be a JSON object");

  const auto m = static_cast<std::size_t>(cx.edge_count());
  std::vector<double> values(m, 0.0);
  std::vector<bool> seen(m, false);
  for (const auto& [key, value] : map->items()) {
    int e = cx.edge_index(key);
    if (e < 0) {
      int idx = -1;
      const auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), idx);
      if (ec == std::errc() && ptr == key.data() + key.size() && idx >= 0 &&
          idx < cx.edge_count()) {
        e = idx;
      }
    }
    if (e < 0) throw InputError("unknown edge '" + key + "'");
    const auto ue = static_cast<std::size_t>(e);
    if (seen[ue]) throw InputError("edge '" + cx.edge(e).label + "' given twice");
    if (!value.is_number()) throw InputError("value for edge '" + key + "' is not a number");
    values[ue] = value.get<double>();
    if (!std::isfinite(values[ue])) throw InputError("value for edge '" + key + "' is not finite");
    seen[ue] = true;
  }
  for (std::size_t e = 0; e < m; ++e) {
    if (!seen[e]) throw InputError("missing edge '" + cx.edge(static_cast<int>(e)).label + "'");
  }
  return values;
}

std::vector<double> load_coords(const std::string& path, const HexComplex& cx,
                                const std::string& member) {
  return parse_coords(read_json_file(path), cx, member);
}

json coord_map(const HexComplex& cx, const std::vector<double>& values) {
  json out = json::object();
  for (int e = 0; e < cx.edge_count(); ++e) {
    out[cx.edge(e).label] = values[static_cast<std::size_t>(e)];
  }
  return out;
}

json cycle_json(const HexComplex& cx, const EdgeCycle& cycle) {
  json edges = json::array();
  for (int e : cycle.edges) edges.push_back(cx.edge(e).label);
  json coeffs = json::object();
  const auto mult = cycle.multiplicities(cx.edge_count());
  for (int e = 0; e < cx.edge_count(); ++e) {
    if (mult[static_cast<std::size_t>(e)] != 0) coeffs[cx.edge(e).label] = mult[static_cast<std::size_t>(e)];
  }
  return {{"edges", edges}, {"coefficients", coeffs}};
}

json report_json(const HexComplex& cx, const PolytopeReport& report) {
  json out;
  out["feasible"] = report.feasible;
  out["on_boundary"] = report.on_boundary;
  out["lp_minimum"] = report.lp_minimum;
  out["certificate"] = coord_map(cx, report.certificate);
  out["boundary_values"] = report.boundary_values;
  if (report.witness) out["witness_x"] = report.witness->values;
  return out;
}

json report_json(const HexComplex& cx, const SolveReport& report) {
  json out;
  out["converged"] = report.converged;
  out["message"] = report.message;
  out["iterations"] = report.iterations;
  out["gradient_norm"] = report.gradient_norm;
  out["consistency_residual"] = report.consistency_residual;
  out["energy"] = report.energy;
  if (report.achieved.values.size() == static_cast<std::size_t>(cx.edge_count())) {
    out["achieved_z"] = coord_map(cx, report.achieved.values);
  }
  out["energy_history"] = report.energy_history;
  out["decrements"] = report.decrement_history;
  return out;
}

json metric_json(const HexComplex& cx, const HyperbolicMetric& metric) {
  json out;
  out["lengths"] = coord_map(cx, metric.edge_lengths);
  json sides = json::object();
  for (int e = 0; e < cx.edge_count(); ++e) {
    const auto& s = metric.side_lengths[static_cast<std::size_t>(e)];
    sides[cx.edge(e).label] = {s[0], s[1]};
  }
  out["side_lengths"] = sides;
  out["boundary_lengths"] = metric.boundary_lengths;
  out["x"] = metric.x.values;
  out["consistency_residual"] = metric.consistency_residual;
  return out;
}

json verification_json(const VerificationReport& report) {
  json out;
  out["passed"] = report.passed;
  out["max_residual"] = report.max_residual;
  out["hexagon_residuals"] = report.hexagon_residuals;
  out["edge_residuals"] = report.edge_residuals;
  out["boundary_residuals"] = report.boundary_residuals;
  out["failures"] = report.failures;
  return out;
}

json vertices_json(const HexComplex& cx, const HyperbolicMetric& metric) {
  json out = json::array();
  for (int h = 0; h < cx.hexagon_count(); ++h) {
    const XTriple& x = metric.cell_x[static_cast<std::size_t>(h)];
    const YTriple& y = metric.cell_y[static_cast<std::size_t>(h)];
    const HexRealization r = walk_hexagon({x[0], y[2], x[1], y[0], x[2]}, y[1]);
    json hex = json::array();
    for (const HPoint& p : r.vertices) hex.push_back({p[0], p[1], p[2]});
    out.push_back(hex);
  }
  return out;
}

}  // namespace hexmetric::cli
