#pragma once

// Explicit right-angled hexagons in the hyperboloid model
//   { p in R^3 : -p0^2 + p1^2 + p2^2 = -1, p0 > 0 }
// used as an independent check on the cosine law and on solved metrics.

#include <array>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "hexmetric/complex.hpp"
#include "hexmetric/hexagon.hpp"
#include "hexmetric/solver.hpp"

namespace hexmetric {

using HPoint = Eigen::Vector3d;

/// -a0 b0 + a1 b1 + a2 b2.
double minkowski_dot(const Eigen::Vector3d& a, const Eigen::Vector3d& b);

/// Rescales a timelike vector onto the upper sheet. Throws DomainError otherwise.
HPoint normalize_point(const Eigen::Vector3d& p);

/// Hyperbolic distance, via 2 asinh(|p - q| / 2) for accuracy at short range.
double distance(const HPoint& p, const HPoint& q);

/// Unit tangent at p pointing along the geodesic toward q (q != p).
Eigen::Vector3d direction_to(const HPoint& p, const HPoint& q);

/// Boost in the (0, axis) plane; axis is 1 or 2.
Eigen::Matrix3d lorentz_boost(int axis, double rapidity);

/// Rotation about the p0 axis.
Eigen::Matrix3d hyperbolic_rotation(double angle);

struct HexRealization {
  std::array<HPoint, 6> vertices;  // vertex k starts side k
  std::array<double, 6> sides{};   // measured from the vertices
  /// |<u, w>| for the unit tangents u, w of the two sides at each vertex.
  std::array<double, 6> angle_residuals{};
  /// |measured length of side 5 - its prescribed length|.
  double closure_residual = 0.0;
};

/// Walks sides 0..4 with the given lengths, turning left by a right angle at
/// each vertex, starting at (1,0,0) heading along (0,1,0). Side 5 is whatever
/// closes the polygon; `expected_last` is its prescribed length.
HexRealization walk_hexagon(const std::array<double, 5>& lengths, double expected_last);

/// Re-measures sides, angles and closure of arbitrary vertices.
HexRealization measure(const std::array<HPoint, 6>& vertices, double expected_last);

/// Slot order x_0, y_2, x_1, y_0, x_2, y_1 with y = cosine_law_y(x).
HexRealization realize_hexagon(const XTriple& x);

struct VerificationReport {
  bool passed = true;
  double max_residual = 0.0;
  std::vector<double> hexagon_residuals;  // max over closure, angles and side errors
  std::vector<double> edge_residuals;     // |side a - side b| from the realized hexagons
  std::vector<double> boundary_residuals;
  std::vector<std::string> failures;
};

/// Realizes every hexagon from the metric's own x- and y-values (no cosine
/// law), then checks closure and right angles, that both hexagons along each
/// edge give it the same length, and that the realized x-sides of each
/// boundary component add up to the reported boundary length.
VerificationReport verify_metric(const HexComplex& cx, const HyperbolicMetric& metric, double tol);

}  // namespace hexmetric
