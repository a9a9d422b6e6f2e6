#include "hexmetric/coords.hpp"

#include <string>

#include "hexmetric/errors.hpp"

namespace hexmetric {

namespace {

void require_size(std::size_t got, int want, const char* what) {
  if (got != static_cast<std::size_t>(want)) {
    throw ValidationError(std::string(what) + ": expected " + std::to_string(want) +
                          " values, got " + std::to_string(got));
  }
}

}  // namespace

TCoordinate t_of(const HexComplex& cx, const LengthStructure& x) {
  require_size(x.values.size(), cx.xarc_count(), "t_of");
  TCoordinate t{std::vector<double>(x.values.size())};
  for (int h = 0; h < cx.hexagon_count(); ++h) {
    const auto arcs = HexComplex::cell_arcs(h);
    const TTriple cell = x_to_t(XTriple{x[arcs[0]], x[arcs[1]], x[arcs[2]]});
    for (int i = 0; i < 3; ++i) t[arcs[i]] = cell[i];
  }
  return t;
}

TTriple cell_t(const TCoordinate& t, int hex) {
  return {t[3 * hex], t[3 * hex + 1], t[3 * hex + 2]};
}

LengthStructure x_of(const HexComplex& cx, const TCoordinate& t) {
  require_size(t.values.size(), cx.xarc_count(), "x_of");
  LengthStructure x{std::vector<double>(t.values.size())};
  for (int h = 0; h < cx.hexagon_count(); ++h) {
    const TTriple cell = cell_t(t, h);
    if (!(pairwise_margin(cell) > 0.0)) {
      throw DomainError("x_of: hexagon " + std::to_string(h) +
                        " has a non-positive pairwise t-sum");
    }
    const XTriple lengths = t_to_x(cell);
    const auto arcs = HexComplex::cell_arcs(h);
    for (int i = 0; i < 3; ++i) x[arcs[i]] = lengths[i];
  }
  return x;
}

ECoordinate e_invariant_of_t(const HexComplex& cx, const TCoordinate& t) {
  require_size(t.values.size(), cx.xarc_count(), "e_invariant");
  ECoordinate z{std::vector<double>(static_cast<std::size_t>(cx.edge_count()))};
  for (int e = 0; e < cx.edge_count(); ++e) {
    const auto [wa, wb] = cx.facing_arcs(e);
    z[e] = t[wa] + t[wb];
  }
  return z;
}

ECoordinate e_invariant(const HexComplex& cx, const LengthStructure& x) {
  return e_invariant_of_t(cx, t_of(cx, x));
}

ECoordinate e_invariant_from_lengths(const HexComplex& cx, const LengthStructure& x) {
  require_size(x.values.size(), cx.xarc_count(), "e_invariant_from_lengths");
  ECoordinate z{std::vector<double>(static_cast<std::size_t>(cx.edge_count()))};
  for (int e = 0; e < cx.edge_count(); ++e) {
    double adjacent = 0.0;
    for (int w : cx.adjacent_arcs(e)) adjacent += x[w];
    const auto [wa, wb] = cx.facing_arcs(e);
    z[e] = 0.5 * (adjacent - x[wa] - x[wb]);
  }
  return z;
}

double cycle_z_sum(const ECoordinate& z, const EdgeCycle& cycle) {
  double sum = 0.0;
  for (int e : cycle.edges) sum += z[e];
  return sum;
}

std::pair<double, double> cycle_sum(const HexComplex& cx, const LengthStructure& x,
                                    const EdgeCycle& cycle) {
  const ECoordinate z = e_invariant(cx, x);
  double arcs = 0.0;
  for (const CycleStep& step : cycle.steps) {
    arcs += x[HexComplex::corner_arc(step.hex, step.in, step.out)];
  }
  return {cycle_z_sum(z, cycle), arcs};
}

TCoordinate t_from_shifts(const HexComplex& cx, const ECoordinate& z,
                          const std::vector<double>& shifts) {
  require_size(z.values.size(), cx.edge_count(), "t_from_shifts");
  require_size(shifts.size(), cx.edge_count(), "t_from_shifts");
  TCoordinate t{std::vector<double>(static_cast<std::size_t>(cx.xarc_count()))};
  for (int e = 0; e < cx.edge_count(); ++e) {
    const auto [wa, wb] = cx.facing_arcs(e);
    const double s = shifts[static_cast<std::size_t>(e)];
    t[wa] = 0.5 * z[e] + s;
    t[wb] = 0.5 * z[e] - s;
  }
  return t;
}

std::vector<double> shifts_of(const HexComplex& cx, const TCoordinate& t) {
  require_size(t.values.size(), cx.xarc_count(), "shifts_of");
  std::vector<double> s(static_cast<std::size_t>(cx.edge_count()));
  for (int e = 0; e < cx.edge_count(); ++e) {
    const auto [wa, wb] = cx.facing_arcs(e);
    s[static_cast<std::size_t>(e)] = 0.5 * (t[wa] - t[wb]);
  }
  return s;
}

std::vector<double> boundary_lengths(const HexComplex& cx, const LengthStructure& x) {
  require_size(x.values.size(), cx.xarc_count(), "boundary_lengths");
  std::vector<double> out;
  for (const BoundaryCycle& b : cx.boundary_components()) {
    double sum = 0.0;
    for (int arc : b.arcs) sum += x[arc];
    out.push_back(sum);
  }
  return out;
}

std::vector<double> boundary_values(const HexComplex& cx, const ECoordinate& z) {
  std::vector<double> out;
  for (const BoundaryCycle& b : cx.boundary_components()) out.push_back(cycle_z_sum(z, b.cycle));
  return out;
}

}  // namespace hexmetric
