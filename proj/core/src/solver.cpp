#include "hexmetric/solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Cholesky>

#include "hexmetric/errors.hpp"
#include "hexmetric/polytope.hpp"
#include "hexmetric/special.hpp"

namespace hexmetric {

namespace {

void require_domain(const HexComplex& cx, const TCoordinate& t, const char* fn) {
  if (t.values.size() != static_cast<std::size_t>(cx.xarc_count())) {
    throw ValidationError(std::string(fn) + ": t-coordinate has wrong size");
  }
  for (int h = 0; h < cx.hexagon_count(); ++h) {
    if (!(pairwise_margin(cell_t(t, h)) > 0.0)) {
      throw DomainError(std::string(fn) + ": hexagon " + std::to_string(h) +
                        " has a non-positive pairwise t-sum");
    }
  }
}

double sup_norm(const Eigen::VectorXd& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

double max_mismatch(const std::vector<std::array<double, 2>>& sides) {
  double worst = 0.0;
  for (const auto& s : sides) worst = std::max(worst, std::abs(s[0] - s[1]));
  return worst;
}

}  // namespace

void SolveConfig::validate() const {
  if (!(gradient_tolerance > 0.0) || !(consistency_tolerance > 0.0)) {
    throw ValidationError("solver tolerances must be positive");
  }
  if (!(backtracking > 0.0 && backtracking < 1.0)) {
    throw ValidationError("backtracking factor must lie in (0, 1)");
  }
  if (!(armijo > 0.0 && armijo < 1.0)) throw ValidationError("Armijo constant must lie in (0, 1)");
  if (!(margin_floor > 0.0)) throw ValidationError("margin floor must be positive");
  if (max_iterations < 0 || max_line_search_steps <= 0) {
    throw ValidationError("iteration limits must be positive");
  }
}

double energy(const HexComplex& cx, const TCoordinate& t) {
  require_domain(cx, t, "energy");
  double sum = 0.0;
  for (int h = 0; h < cx.hexagon_count(); ++h) sum += theta(cell_t(t, h));
  return sum;
}

std::vector<double> energy_gradient(const HexComplex& cx, const TCoordinate& t) {
  require_domain(cx, t, "energy_gradient");
  std::vector<double> g(t.values.size());
  for (int h = 0; h < cx.hexagon_count(); ++h) {
    const TTriple cell = theta_grad(cell_t(t, h));
    for (int i = 0; i < 3; ++i) g[static_cast<std::size_t>(3 * h + i)] = cell[i];
  }
  return g;
}

Eigen::VectorXd reduced_gradient(const HexComplex& cx, const TCoordinate& t) {
  const auto g = energy_gradient(cx, t);
  Eigen::VectorXd out(cx.edge_count());
  for (int e = 0; e < cx.edge_count(); ++e) {
    const auto [wa, wb] = cx.facing_arcs(e);
    out[e] = g[static_cast<std::size_t>(wa)] - g[static_cast<std::size_t>(wb)];
  }
  return out;
}

Eigen::MatrixXd reduced_hessian(const HexComplex& cx, const TCoordinate& t) {
  require_domain(cx, t, "reduced_hessian");
  const int m = cx.edge_count();
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(m, m);
  for (int c = 0; c < cx.hexagon_count(); ++c) {
    const HexHessian block = theta_hessian(cell_t(t, c));
    const auto arcs = HexComplex::cell_arcs(c);
    std::array<int, 3> edge{};
    std::array<double, 3> sign{};
    for (int i = 0; i < 3; ++i) {
      const auto [e, side] = cx.facing_edge(arcs[i]);
      edge[i] = e;
      sign[i] = side == 0 ? 1.0 : -1.0;
    }
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) h(edge[i], edge[j]) += sign[i] * sign[j] * block(i, j);
    }
  }
  return h;
}

std::vector<std::array<double, 2>> edge_side_lengths(const HexComplex& cx, const TCoordinate& t) {
  require_domain(cx, t, "edge_side_lengths");
  std::vector<YTriple> cell_y;
  cell_y.reserve(static_cast<std::size_t>(cx.hexagon_count()));
  for (int h = 0; h < cx.hexagon_count(); ++h) cell_y.push_back(y_from_t(cell_t(t, h)));
  std::vector<std::array<double, 2>> sides(static_cast<std::size_t>(cx.edge_count()));
  for (int e = 0; e < cx.edge_count(); ++e) {
    const auto [wa, wb] = cx.facing_arcs(e);
    // The side facing x-arc w (hexagon w / 3, local index w % 3) has length y[w % 3].
    sides[static_cast<std::size_t>(e)] = {cell_y[static_cast<std::size_t>(wa / 3)][wa % 3],
                                          cell_y[static_cast<std::size_t>(wb / 3)][wb % 3]};
  }
  return sides;
}

Solution maximize(const HexComplex& cx, const ECoordinate& z, const SolveConfig& cfg,
                  const std::optional<std::vector<double>>& start_shifts) {
  cfg.validate();
  std::vector<double> s;
  if (start_shifts) {
    PolytopeReport report = check_feasibility(cx, z);
    if (!report.feasible) {
      throw InfeasibleError("E-coordinate is not feasible", std::move(report));
    }
    s = *start_shifts;
    if (s.size() != static_cast<std::size_t>(cx.edge_count())) {
      throw ValidationError("start point has wrong size");
    }
  } else {
    s = interior_point(cx, z).shifts;
  }
  if (!(domain_margin(cx, t_from_shifts(cx, z, s)) > cfg.margin_floor)) {
    throw DomainError("maximize: start point is not strictly inside the domain");
  }

  const int m = cx.edge_count();
  auto to_vec = [m](const std::vector<double>& v) {
    return Eigen::Map<const Eigen::VectorXd>(v.data(), m);
  };

  Solution sol;
  SolveReport& rep = sol.report;
  TCoordinate t = t_from_shifts(cx, z, s);
  double value = energy(cx, t);
  rep.energy_history.push_back(value);

  auto finish = [&](bool converged) {
    rep.energy = value;
    rep.achieved = e_invariant_of_t(cx, t);
    rep.converged = converged;
    sol.t = t;
    sol.shifts = s;
  };

  for (int iter = 0;; ++iter) {
    const Eigen::VectorXd g = reduced_gradient(cx, t);
    rep.iterations = iter;
    rep.gradient_norm = sup_norm(g);
    rep.consistency_residual = max_mismatch(edge_side_lengths(cx, t));
    if (rep.gradient_norm < cfg.gradient_tolerance &&
        rep.consistency_residual < cfg.consistency_tolerance) {
      finish(true);
      rep.message = "converged";
      return sol;
    }
    if (iter >= cfg.max_iterations) {
      finish(false);
      std::ostringstream os;
      os << "no convergence after " << iter << " iterations (gradient " << rep.gradient_norm
         << ", mismatch " << rep.consistency_residual << ")";
      rep.message = os.str();
      throw ConvergenceError(rep.message, rep);
    }

    const Eigen::MatrixXd neg_h = -reduced_hessian(cx, t);
    const Eigen::LDLT<Eigen::MatrixXd> ldlt(neg_h);
    if (ldlt.info() != Eigen::Success || !ldlt.isPositive()) {
      finish(false);
      rep.message = "reduced Hessian is not negative definite";
      throw ConvergenceError(rep.message, rep);
    }
    const Eigen::VectorXd d = ldlt.solve(g);
    const double slope = g.dot(d);
    rep.decrement_history.push_back(slope);

    double alpha = 1.0;
    bool accepted = false;
    bool hit_boundary = false;
    for (int k = 0; k < cfg.max_line_search_steps; ++k, alpha *= cfg.backtracking) {
      std::vector<double> trial(s);
      Eigen::Map<Eigen::VectorXd>(trial.data(), m) = to_vec(s) + alpha * d;
      const TCoordinate t_trial = t_from_shifts(cx, z, trial);
      if (!(domain_margin(cx, t_trial) > cfg.margin_floor)) {
        hit_boundary = true;
        continue;
      }
      const double v_trial = energy(cx, t_trial);
      bool ok = v_trial >= value + cfg.armijo * alpha * slope;
      if (!ok && std::abs(v_trial - value) <= 64.0 * 2.2e-16 * (1.0 + std::abs(value))) {
        // Energy differences are at rounding level; accept on gradient decrease.
        ok = sup_norm(reduced_gradient(cx, t_trial)) < rep.gradient_norm;
      }
      if (ok) {
        s = std::move(trial);
        t = t_trial;
        value = std::max(value, v_trial);
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      finish(false);
      rep.message = hit_boundary ? "line search stalled at the domain boundary"
                                 : "line search failed to increase the energy";
      throw ConvergenceError(rep.message, rep);
    }
    rep.energy_history.push_back(energy(cx, t));
  }
}

HyperbolicMetric extract_metric(const HexComplex& cx, const TCoordinate& t, const SolveConfig& cfg) {
  HyperbolicMetric metric;
  metric.side_lengths = edge_side_lengths(cx, t);
  metric.consistency_residual = max_mismatch(metric.side_lengths);
  if (!(metric.consistency_residual <= cfg.consistency_tolerance)) {
    std::ostringstream os;
    os << "edge length mismatch " << metric.consistency_residual << " exceeds tolerance "
       << cfg.consistency_tolerance;
    throw ConsistencyError(os.str());
  }
  for (const auto& s : metric.side_lengths) metric.edge_lengths.push_back(0.5 * (s[0] + s[1]));
  metric.x = x_of(cx, t);
  for (int h = 0; h < cx.hexagon_count(); ++h) {
    const TTriple cell = cell_t(t, h);
    metric.cell_x.push_back(t_to_x(cell));
    metric.cell_y.push_back(y_from_t(cell));
  }
  metric.boundary_lengths = boundary_lengths(cx, metric.x);
  return metric;
}

ForwardResult forward_map(const HexComplex& cx, const std::vector<double>& edge_lengths) {
  if (edge_lengths.size() != static_cast<std::size_t>(cx.edge_count())) {
    throw ValidationError("forward_map: expected one length per edge");
  }
  for (std::size_t e = 0; e < edge_lengths.size(); ++e) {
    if (!(edge_lengths[e] > 0.0) || !std::isfinite(edge_lengths[e])) {
      throw DomainError("forward_map: edge " + cx.edge(static_cast<int>(e)).label +
                        " has non-positive length");
    }
  }
  ForwardResult out;
  out.x.values.resize(static_cast<std::size_t>(cx.xarc_count()));
  for (int h = 0; h < cx.hexagon_count(); ++h) {
    YTriple y;
    for (int i = 0; i < 3; ++i) {
      y[i] = edge_lengths[static_cast<std::size_t>(cx.edge_of({h, y_slot_of_index(i)}))];
    }
    const XTriple x = cosine_law_x(y);
    for (int i = 0; i < 3; ++i) out.x[3 * h + i] = x[i];
  }
  out.z = e_invariant(cx, out.x);
  out.boundary_lengths = boundary_lengths(cx, out.x);
  return out;
}

}  // namespace hexmetric
