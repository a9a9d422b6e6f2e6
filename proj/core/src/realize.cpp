#include "hexmetric/realize.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Geometry>

#include "hexmetric/errors.hpp"

namespace hexmetric {

double minkowski_dot(const Eigen::Vector3d& a, const Eigen::Vector3d& b) {
  return -a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

HPoint normalize_point(const Eigen::Vector3d& p) {
  const double q = -minkowski_dot(p, p);
  if (!(q > 0.0)) throw DomainError("normalize_point: vector is not timelike");
  HPoint out = p / std::sqrt(q);
  if (out[0] < 0.0) out = -out;
  return out;
}

double distance(const HPoint& p, const HPoint& q) {
  const Eigen::Vector3d d = p - q;
  // The chord p - q is spacelike with Minkowski length 2 sinh(dist / 2).
  const double chord2 = std::max(0.0, minkowski_dot(d, d));
  return 2.0 * std::asinh(0.5 * std::sqrt(chord2));
}

Eigen::Vector3d direction_to(const HPoint& p, const HPoint& q) {
  // q = cosh(d) p + sinh(d) u with u tangent at p.
  const Eigen::Vector3d u = q + minkowski_dot(p, q) * p;
  const double n2 = minkowski_dot(u, u);
  if (!(n2 > 0.0)) throw DomainError("direction_to: points coincide");
  return u / std::sqrt(n2);
}

Eigen::Matrix3d lorentz_boost(int axis, double rapidity) {
  if (axis != 1 && axis != 2) throw ValidationError("lorentz_boost: axis must be 1 or 2");
  Eigen::Matrix3d m = Eigen::Matrix3d::Identity();
  m(0, 0) = m(axis, axis) = std::cosh(rapidity);
  m(0, axis) = m(axis, 0) = std::sinh(rapidity);
  return m;
}

Eigen::Matrix3d hyperbolic_rotation(double angle) {
  Eigen::Matrix3d m = Eigen::Matrix3d::Identity();
  m(1, 1) = m(2, 2) = std::cos(angle);
  m(1, 2) = -std::sin(angle);
  m(2, 1) = std::sin(angle);
  return m;
}

namespace {

// Walk and measurement run in extended precision: vertices far from the base
// point have large coordinates, and Minkowski products of them cancel.
using Real = long double;
using Vec = Eigen::Matrix<Real, 3, 1>;

Real mdot(const Vec& a, const Vec& b) { return -a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Real ldistance(const Vec& p, const Vec& q) {
  const Vec d = p - q;
  return 2 * std::asinh(std::sqrt(std::max(Real(0), mdot(d, d))) / 2);
}

Vec ldirection(const Vec& p, const Vec& q) {
  const Vec u = q + mdot(p, q) * p;
  const Real n2 = mdot(u, u);
  if (!(n2 > 0)) throw DomainError("direction_to: points coincide");
  return u / std::sqrt(n2);
}

HexRealization measure_extended(const std::array<Vec, 6>& v, double expected_last) {
  HexRealization r;
  for (std::size_t k = 0; k < 6; ++k) {
    const Vec& a = v[k];
    const Vec& b = v[(k + 1) % 6];
    const Vec& prev = v[(k + 5) % 6];
    r.vertices[k] = a.cast<double>();
    r.sides[k] = static_cast<double>(ldistance(a, b));
    r.angle_residuals[k] = static_cast<double>(std::abs(mdot(ldirection(a, b), ldirection(a, prev))));
  }
  r.closure_residual = std::abs(r.sides[5] - expected_last);
  return r;
}

}  // namespace

HexRealization measure(const std::array<HPoint, 6>& vertices, double expected_last) {
  std::array<Vec, 6> v;
  for (std::size_t k = 0; k < 6; ++k) v[k] = vertices[k].cast<Real>();
  return measure_extended(v, expected_last);
}

HexRealization walk_hexagon(const std::array<double, 5>& lengths, double expected_last) {
  // Columns of the frame are the current vertex p, the unit tangent v along the
  // next side and its left normal w. Moving along a side and turning left are
  // both linear in the frame, so no renormalization of large vectors is needed.
  Eigen::Matrix<Real, 3, 3> frame = Eigen::Matrix<Real, 3, 3>::Identity();
  std::array<Vec, 6> vertices;
  vertices[0] = frame.col(0);
  for (std::size_t k = 0; k < 5; ++k) {
    const Real c = std::cosh(static_cast<Real>(lengths[k]));
    const Real s = std::sinh(static_cast<Real>(lengths[k]));
    const Vec p = c * frame.col(0) + s * frame.col(1);
    const Vec v = s * frame.col(0) + c * frame.col(1);
    frame.col(0) = p;
    frame.col(1) = frame.col(2);
    frame.col(2) = -v;
    vertices[k + 1] = p;
  }
  return measure_extended(vertices, expected_last);
}

HexRealization realize_hexagon(const XTriple& x) {
  const YTriple y = cosine_law_y(x);
  return walk_hexagon({x[0], y[2], x[1], y[0], x[2]}, y[1]);
}

VerificationReport verify_metric(const HexComplex& cx, const HyperbolicMetric& metric, double tol) {
  VerificationReport rep;
  const int n = cx.hexagon_count();
  if (metric.cell_x.size() != static_cast<std::size_t>(n) ||
      metric.cell_y.size() != static_cast<std::size_t>(n)) {
    throw ValidationError("verify_metric: metric does not match the complex");
  }
  auto fail = [&](const std::string& msg, double residual) {
    rep.max_residual = std::max(rep.max_residual, residual);
    if (!(residual <= tol)) {
      rep.passed = false;
      rep.failures.push_back(msg);
    }
  };

  // Measured side lengths per (hexagon, slot).
  std::vector<std::array<double, 6>> sides(static_cast<std::size_t>(n));
  for (int h = 0; h < n; ++h) {
    const XTriple& x = metric.cell_x[static_cast<std::size_t>(h)];
    const YTriple& y = metric.cell_y[static_cast<std::size_t>(h)];
    const std::array<double, 6> prescribed{x[0], y[2], x[1], y[0], x[2], y[1]};
    const HexRealization r = walk_hexagon({x[0], y[2], x[1], y[0], x[2]}, y[1]);
    double worst = r.closure_residual;
    for (std::size_t k = 0; k < 6; ++k) {
      worst = std::max(worst, r.angle_residuals[k]);
      worst = std::max(worst, std::abs(r.sides[k] - prescribed[k]));
    }
    sides[static_cast<std::size_t>(h)] = r.sides;
    rep.hexagon_residuals.push_back(worst);
    std::ostringstream os;
    os << "hexagon " << h << ": realization residual " << worst;
    fail(os.str(), worst);
  }

  for (int e = 0; e < cx.edge_count(); ++e) {
    const Edge& edge = cx.edge(e);
    const double la = sides[static_cast<std::size_t>(edge.a.hex)][static_cast<std::size_t>(edge.a.pos)];
    const double lb = sides[static_cast<std::size_t>(edge.b.hex)][static_cast<std::size_t>(edge.b.pos)];
    double residual = std::abs(la - lb);
    if (e < static_cast<int>(metric.edge_lengths.size())) {
      residual = std::max(residual, std::abs(0.5 * (la + lb) - metric.edge_lengths[static_cast<std::size_t>(e)]));
    }
    rep.edge_residuals.push_back(residual);
    std::ostringstream os;
    os << "edge " << edge.label << ": glued sides differ by " << residual;
    fail(os.str(), residual);
  }

  const auto& components = cx.boundary_components();
  for (std::size_t b = 0; b < components.size(); ++b) {
    double sum = 0.0;
    for (int arc : components[b].arcs) {
      const SlotRef s = HexComplex::xarc_slot(arc);
      sum += sides[static_cast<std::size_t>(s.hex)][static_cast<std::size_t>(s.pos)];
    }
    const double reported =
        b < metric.boundary_lengths.size() ? metric.boundary_lengths[b] : 0.0;
    const double residual = std::abs(sum - reported);
    rep.boundary_residuals.push_back(residual);
    std::ostringstream os;
    os << "boundary " << b << ": x-sides sum to " << sum << ", reported " << reported;
    fail(os.str(), residual);
  }
  return rep;
}

}  // namespace hexmetric
