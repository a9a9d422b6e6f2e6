#include "hexmetric/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

#include "hexmetric/errors.hpp"

namespace hexmetric {

namespace {

void require_edges(const HexComplex& cx, const ECoordinate& z) {
  if (z.values.size() != static_cast<std::size_t>(cx.edge_count())) {
    throw ValidationError("E-coordinate has " + std::to_string(z.values.size()) +
                          " entries, complex has " + std::to_string(cx.edge_count()) + " edges");
  }
  for (double v : z.values) {
    if (!std::isfinite(v)) throw ValidationError("E-coordinate has a non-finite entry");
  }
}

// Coefficient rows y_i + y_j - y_k >= 0 for each 2-cell, with repeated edges merged.
std::vector<std::vector<double>> cone_rows(const HexComplex& cx) {
  std::vector<std::vector<double>> rows;
  const auto m = static_cast<std::size_t>(cx.edge_count());
  for (int h = 0; h < cx.hexagon_count(); ++h) {
    const auto es = cx.cell_edges(h);
    for (int k = 0; k < 3; ++k) {
      std::vector<double> row(m, 0.0);
      for (int i = 0; i < 3; ++i) row[static_cast<std::size_t>(es[i])] += (i == k) ? -1.0 : 1.0;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace

LinearProgram cone_program(const HexComplex& cx, const ECoordinate& z) {
  require_edges(cx, z);
  LinearProgram lp;
  lp.objective = z.values;
  for (auto& row : cone_rows(cx)) {
    // Rows that merged to all zeros carry no constraint.
    if (std::all_of(row.begin(), row.end(), [](double c) { return c == 0.0; })) continue;
    lp.rows.push_back(LpRow{std::move(row), Relation::GreaterEqual, 0.0});
  }
  lp.rows.push_back(
      LpRow{std::vector<double>(static_cast<std::size_t>(cx.edge_count()), 1.0), Relation::Equal, 1.0});
  return lp;
}

bool in_cone(const HexComplex& cx, const std::vector<double>& y, double tol) {
  if (y.size() != static_cast<std::size_t>(cx.edge_count())) return false;
  for (double v : y) {
    if (v < -tol) return false;
  }
  for (const auto& row : cone_rows(cx)) {
    double sum = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) sum += row[i] * y[i];
    if (sum < -tol) return false;
  }
  return true;
}

double domain_margin(const HexComplex& cx, const TCoordinate& t) {
  double margin = std::numeric_limits<double>::infinity();
  for (int h = 0; h < cx.hexagon_count(); ++h) margin = std::min(margin, pairwise_margin(cell_t(t, h)));
  return margin;
}

namespace {

struct MarginSolution {
  std::vector<double> shifts;
  double margin;
};

// max mu s.t. each pairwise t-sum >= mu, with s = s_plus - s_minus and
// mu = mu_plus - mu_minus.
MarginSolution max_margin(const HexComplex& cx, const ECoordinate& z) {
  const int m = cx.edge_count();
  const int vars = 2 * m + 2;
  LinearProgram lp;
  lp.objective.assign(static_cast<std::size_t>(vars), 0.0);
  lp.objective[static_cast<std::size_t>(2 * m)] = -1.0;
  lp.objective[static_cast<std::size_t>(2 * m + 1)] = 1.0;

  auto arc_term = [&](int arc, std::vector<double>& row, double& constant) {
    const auto [e, side] = cx.facing_edge(arc);
    const double sigma = side == 0 ? 1.0 : -1.0;
    row[static_cast<std::size_t>(e)] += sigma;
    row[static_cast<std::size_t>(m + e)] -= sigma;
    constant += 0.5 * z[e];
  };
  for (int h = 0; h < cx.hexagon_count(); ++h) {
    const auto arcs = HexComplex::cell_arcs(h);
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        std::vector<double> row(static_cast<std::size_t>(vars), 0.0);
        double constant = 0.0;
        arc_term(arcs[i], row, constant);
        arc_term(arcs[j], row, constant);
        row[static_cast<std::size_t>(2 * m)] = -1.0;
        row[static_cast<std::size_t>(2 * m + 1)] = 1.0;
        lp.rows.push_back(LpRow{std::move(row), Relation::GreaterEqual, -constant});
      }
    }
  }
  const LpResult res = lp_solve(lp);
  if (res.status != LpStatus::Optimal) {
    throw std::runtime_error("interior_point: margin LP did not reach an optimum");
  }
  MarginSolution out;
  out.shifts.resize(static_cast<std::size_t>(m));
  for (int e = 0; e < m; ++e) {
    out.shifts[static_cast<std::size_t>(e)] =
        res.x[static_cast<std::size_t>(e)] - res.x[static_cast<std::size_t>(m + e)];
  }
  out.margin = res.x[static_cast<std::size_t>(2 * m)] - res.x[static_cast<std::size_t>(2 * m + 1)];
  return out;
}

}  // namespace

PolytopeReport check_feasibility(const HexComplex& cx, const ECoordinate& z, double tolerance) {
  const LpResult res = lp_solve(cone_program(cx, z));
  if (res.status != LpStatus::Optimal) {
    throw std::runtime_error("check_feasibility: cone LP did not reach an optimum");
  }
  PolytopeReport report;
  report.lp_minimum = res.value;
  report.certificate = res.x;
  report.on_boundary = std::abs(res.value) <= tolerance;
  report.feasible = res.value > tolerance;
  report.boundary_values = boundary_values(cx, z);
  if (report.feasible) {
    const MarginSolution sol = max_margin(cx, z);
    if (sol.margin > 0.0) {
      report.witness = x_of(cx, t_from_shifts(cx, z, sol.shifts));
    }
  }
  return report;
}

std::vector<EdgeCycle> check_cycles(const HexComplex& cx, const ECoordinate& z,
                                    const std::vector<EdgeCycle>& cycles) {
  require_edges(cx, z);
  std::set<std::vector<int>> seen;
  std::vector<EdgeCycle> violations;
  auto consider = [&](const EdgeCycle& c) {
    if (!seen.insert(c.multiplicities(cx.edge_count())).second) return;
    if (cycle_z_sum(z, c) <= 0.0) violations.push_back(c);
  };
  for (const BoundaryCycle& b : cx.boundary_components()) consider(b.cycle);
  for (const EdgeCycle& c : cycles) consider(c);
  return violations;
}

InteriorPoint interior_point(const HexComplex& cx, const ECoordinate& z) {
  PolytopeReport report = check_feasibility(cx, z);
  if (!report.feasible) {
    std::ostringstream os;
    os << "E-coordinate is not feasible: cone minimum " << report.lp_minimum
       << (report.on_boundary ? " (boundary)" : "");
    throw InfeasibleError(os.str(), std::move(report));
  }
  const MarginSolution sol = max_margin(cx, z);
  if (!(sol.margin > 0.0)) {
    throw InfeasibleError("E-coordinate has no interior length structure", std::move(report));
  }
  InteriorPoint p;
  p.shifts = sol.shifts;
  p.t = t_from_shifts(cx, z, sol.shifts);
  p.margin = domain_margin(cx, p.t);
  return p;
}

}  // namespace hexmetric
