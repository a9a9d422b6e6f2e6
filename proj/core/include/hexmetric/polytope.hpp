#pragma once

// Feasibility of E-coordinates.
//
// z is realized by some length structure exactly when y.z > 0 for every
// nonzero y in the cone
//   D = { y in R^E : y >= 0, y_i + y_j >= y_k for each 2-cell with edges i, j, k },
// which by LP duality is decided by
//   min { y.z : y in D, sum(y) = 1 } > 0.
// Every simple closed normal curve gives a vector of D (its intersection
// numbers), so the cycle inequalities sum_{e in c} z(e) > 0 can be checked
// directly as a cross-check on small complexes.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hexmetric/complex.hpp"
#include "hexmetric/coords.hpp"
#include "hexmetric/lp.hpp"

namespace hexmetric {

/// Normalized LP minima within [-tau, tau] count as the boundary of the
/// polytope and are reported infeasible.
inline constexpr double kFeasibilityTolerance = 1e-9;

struct PolytopeReport {
  bool feasible = false;
  bool on_boundary = false;
  double lp_minimum = 0.0;
  /// Minimizer y of the normalized cone LP; y.z == lp_minimum.
  std::vector<double> certificate;
  /// For feasible z: a length structure with E-invariant z.
  std::optional<LengthStructure> witness;
  /// Per boundary component, the sum of z over its boundary edge cycle.
  std::vector<double> boundary_values;
};

/// Thrown when an operation needs a feasible E-coordinate.
class InfeasibleError : public std::runtime_error {
 public:
  InfeasibleError(const std::string& what, PolytopeReport report)
      : std::runtime_error(what), report_(std::move(report)) {}
  [[nodiscard]] const PolytopeReport& report() const { return report_; }

 private:
  PolytopeReport report_;
};

/// The cone-D LP in edge-indexed variables, with the normalization row.
LinearProgram cone_program(const HexComplex& cx, const ECoordinate& z);

/// True when y satisfies every inequality of D (to `tol`).
bool in_cone(const HexComplex& cx, const std::vector<double>& y, double tol = 1e-12);

PolytopeReport check_feasibility(const HexComplex& cx, const ECoordinate& z,
                                 double tolerance = kFeasibilityTolerance);

/// Cycles among `cycles` and the boundary cycles with nonpositive z-sum.
/// Boundary cycles are always checked, even when absent from `cycles`.
std::vector<EdgeCycle> check_cycles(const HexComplex& cx, const ECoordinate& z,
                                    const std::vector<EdgeCycle>& cycles);

struct InteriorPoint {
  TCoordinate t;
  std::vector<double> shifts;  // facing-pair parameters s_e
  double margin = 0.0;         // min over 2-cells of the pairwise t-sums
};

/// Maximizes the smallest pairwise t-sum over the facing-pair parametrization.
/// Throws InfeasibleError (carrying the report) unless z is feasible.
InteriorPoint interior_point(const HexComplex& cx, const ECoordinate& z);

/// Smallest pairwise t-sum over all 2-cells.
double domain_margin(const HexComplex& cx, const TCoordinate& t);

}  // namespace hexmetric
