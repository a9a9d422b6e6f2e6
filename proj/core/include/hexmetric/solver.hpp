#pragma once

// Energy maximization on the slice of length structures with prescribed
// E-invariant, and the forward map from edge lengths to E-coordinates.
//
// The energy V(t) = sum over 2-cells of theta(t_cell) is strictly concave.
// Restricted to t with E-invariant z (the facing-pair parametrization, one
// shift s_e per edge) its unique maximizer is the length structure of the
// hyperbolic metric with E-coordinate z: there dV/ds_e vanishes, i.e. the two
// hexagons along every edge assign it the same length.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "hexmetric/complex.hpp"
#include "hexmetric/coords.hpp"
#include "hexmetric/hexagon.hpp"

namespace hexmetric {

struct SolveConfig {
  double gradient_tolerance = 1e-10;     // sup-norm of dV/ds
  double consistency_tolerance = 1e-10;  // max_e |y_a(e) - y_b(e)|
  int max_iterations = 100;
  double backtracking = 0.5;
  double armijo = 1e-4;
  double margin_floor = 1e-12;  // trial points with a pairwise t-sum <= this are rejected
  int max_line_search_steps = 80;

  /// Throws ValidationError for non-positive tolerances or a backtracking
  /// factor outside (0, 1).
  void validate() const;
};

struct SolveReport {
  int iterations = 0;
  double gradient_norm = 0.0;
  double consistency_residual = 0.0;
  double energy = 0.0;
  ECoordinate achieved;
  bool converged = false;
  std::vector<double> energy_history;     // V at every iterate, starting point first
  std::vector<double> decrement_history;  // Newton decrement g^T (-H)^{-1} g per iteration
  std::string message;
};

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, SolveReport report)
      : std::runtime_error(what), report_(std::move(report)) {}
  [[nodiscard]] const SolveReport& report() const { return report_; }

 private:
  SolveReport report_;
};

/// The two hexagon-side lengths of some edge disagree beyond tolerance.
class ConsistencyError : public std::runtime_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

struct HyperbolicMetric {
  std::vector<double> edge_lengths;                // mean of the two side values
  std::vector<std::array<double, 2>> side_lengths;  // (side a, side b) per edge
  LengthStructure x;
  std::vector<XTriple> cell_x;
  std::vector<YTriple> cell_y;
  std::vector<double> boundary_lengths;
  double consistency_residual = 0.0;
};

struct Solution {
  TCoordinate t;
  std::vector<double> shifts;
  SolveReport report;
};

struct ForwardResult {
  ECoordinate z;
  std::vector<double> boundary_lengths;
  LengthStructure x;
};

/// V(t). Throws DomainError unless every pairwise t-sum inside each 2-cell is positive.
double energy(const HexComplex& cx, const TCoordinate& t);

/// dV/dt per x-arc: ln cosh(y/2) of the side facing it.
std::vector<double> energy_gradient(const HexComplex& cx, const TCoordinate& t);

/// dV/ds_e = ln cosh(y_a(e)/2) - ln cosh(y_b(e)/2).
Eigen::VectorXd reduced_gradient(const HexComplex& cx, const TCoordinate& t);

/// P^T blockdiag(theta_hessian) P for the facing-pair map P.
Eigen::MatrixXd reduced_hessian(const HexComplex& cx, const TCoordinate& t);

/// Per edge, the lengths (y_a, y_b) its two hexagon sides receive from t.
std::vector<std::array<double, 2>> edge_side_lengths(const HexComplex& cx, const TCoordinate& t);

/// Newton ascent with backtracking. Starts from `start_shifts` when given
/// (must lie strictly inside the domain), else from the max-margin interior
/// point. Throws InfeasibleError, DomainError or ConvergenceError.
Solution maximize(const HexComplex& cx, const ECoordinate& z, const SolveConfig& cfg = {},
                  const std::optional<std::vector<double>>& start_shifts = std::nullopt);

/// Throws ConsistencyError if the side lengths of some edge differ by more
/// than cfg.consistency_tolerance.
HyperbolicMetric extract_metric(const HexComplex& cx, const TCoordinate& t,
                                const SolveConfig& cfg = {});

/// Edge lengths -> (E-coordinate, boundary lengths). Throws DomainError for a
/// non-positive length.
ForwardResult forward_map(const HexComplex& cx, const std::vector<double>& edge_lengths);

/// The y-slot position of hexagon-local index i (the side opposite x-slot 2i).
constexpr int y_slot_of_index(int i) { return (2 * i + 3) % 6; }

}  // namespace hexmetric
