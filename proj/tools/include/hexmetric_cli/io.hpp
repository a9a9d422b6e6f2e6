#pragma once

// JSON file formats for the command-line tool.
//
// Triangulation file:
//   {"hexagons": n,
//    "gluings": [{"a": [hex, pos], "b": [hex, pos], "reversed": false}, ...],
//    "labels": ["e0", ...]}                                   (labels optional)
//
// Coordinate file: an object mapping every edge (by label, or by decimal
// index) to a number. The same map may also sit under a "z" or "lengths"
// member, so the output of `solve` feeds `forward` and vice versa.

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hexmetric/complex.hpp"
#include "hexmetric/polytope.hpp"
#include "hexmetric/realize.hpp"
#include "hexmetric/solver.hpp"

namespace hexmetric::cli {

using json = nlohmann::ordered_json;

/// Malformed or unreadable input.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& doc);

ComplexSpec parse_triangulation(const json& doc);
json triangulation_json(const ComplexSpec& spec);
HexComplex load_complex(const std::string& path);

/// One value per edge, in edge order. `member` names the optional wrapper key.
std::vector<double> parse_coords(const json& doc, const HexComplex& cx, const std::string& member);
std::vector<double> load_coords(const std::string& path, const HexComplex& cx,
                                const std::string& member);

/// {label: value} in edge order.
json coord_map(const HexComplex& cx, const std::vector<double>& values);

json cycle_json(const HexComplex& cx, const EdgeCycle& cycle);
json report_json(const HexComplex& cx, const PolytopeReport& report);
json report_json(const HexComplex& cx, const SolveReport& report);
json metric_json(const HexComplex& cx, const HyperbolicMetric& metric);
json verification_json(const VerificationReport& report);

/// Per hexagon, its six realized vertices as 3-vectors.
json vertices_json(const HexComplex& cx, const HyperbolicMetric& metric);

}  // namespace hexmetric::cli
