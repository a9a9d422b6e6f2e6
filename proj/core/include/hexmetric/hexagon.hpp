#pragma once

// Geometry of a single right-angled hyperbolic hexagon with alternating
// x-sides and y-sides, where y_i is the side opposite x_i.
//
// t-coordinates: t_i = (x_j + x_k - x_i) / 2, so x_i = t_j + t_k. The open
// region H3 = { t : t_i + t_j > 0 for i != j } is exactly the set of
// t-coordinates of non-degenerate hexagons.

#include <array>
#include <cstddef>

#include <Eigen/Core>

namespace hexmetric {

template <class Tag>
struct Triple {
  std::array<double, 3> v{};

  constexpr Triple() = default;
  constexpr Triple(double a, double b, double c) : v{a, b, c} {}

  constexpr double& operator[](std::size_t i) { return v[i]; }
  constexpr double operator[](std::size_t i) const { return v[i]; }
  friend constexpr bool operator==(const Triple&, const Triple&) = default;
};

using XTriple = Triple<struct XSideTag>;
using YTriple = Triple<struct YSideTag>;
using TTriple = Triple<struct TCoordTag>;

/// d^2 theta / dt_r dt_s.
using HexHessian = Eigen::Matrix3d;

/// Points with min_{i != j}(t_i + t_j) at or below this are treated as lying on
/// the boundary of H3.
inline constexpr double kInteriorMargin = 1e-14;

/// Smallest pairwise sum min_{i != j}(t_i + t_j).
double pairwise_margin(const TTriple& t);

/// y_i = arccosh((cosh x_i + cosh x_j cosh x_k) / (sinh x_j sinh x_k)).
YTriple cosine_law_y(const XTriple& x);

/// Inverse of cosine_law_y, by the same law with the colors swapped.
XTriple cosine_law_x(const YTriple& y);

/// sinh(x_1) / sinh(y_1); the sine law makes this independent of the index.
double sine_ratio(const XTriple& x);

/// sinh(x_i) / sinh(y_i) for a specific index.
double sine_ratio(const XTriple& x, int i);

TTriple x_to_t(const XTriple& x);

/// Accepts the closed region (pairwise sums >= 0, with x entries then >= 0).
XTriple t_to_x(const TTriple& t);

/// Hexagon energy ("capacity") theta(t) on the closed region, via
///   2 theta = L1(t1+t2+t3) + sum_i L1(t_i) - sum_{i<j} L2(t_i + t_j).
double theta(const TTriple& t);

/// Gradient of theta: component i is ln cosh(y_i / 2). Requires an interior point.
TTriple theta_grad(const TTriple& t);

/// sinh^2(y_i / 2) for each i, computed from t without forming cosh y.
std::array<double, 3> half_y_sinh_squared(const TTriple& t);

/// The y-lengths of the hexagon with t-coordinates t, computed stably.
YTriple y_from_t(const TTriple& t);

/// The positive constant A with dy_i/dx_i = A sinh(y_i), evaluated from the
/// sine law as sinh(x_1) / (sinh^2(y_1) sinh(x_2) sinh(x_3)).
double derivative_constant(const XTriple& x);

/// Hessian of theta assembled from the closed forms
///   H_ij = -2A sinh^2(y_i/2) sinh^2(y_j/2)                      (i != j)
///   H_ii = -2A sinh^2(y_i/2) (sinh^2(y_j/2) + sinh^2(y_k/2) + 1).
HexHessian theta_hessian(const TTriple& t);

/// Line integral of sum_i ln cosh(y_i/2) dt_i along the segment from the origin
/// to t, using `segments` geometrically graded Gauss-Legendre panels to absorb
/// the logarithmic singularity at the origin. Independent of the closed form.
double theta_by_path_integral(const TTriple& t, int segments = 48);

/// Line integral of the same 1-form along the straight segment from a to b
/// (both in the closed region, at least one interior), using `segments`
/// uniform Gauss-Legendre panels.
double path_integral_segment(const TTriple& a, const TTriple& b, int segments = 32);

}  // namespace hexmetric
