#pragma once

// Coordinates on a complex: x-arc lengths, their per-hexagon t-transform, and
// the per-edge E-invariant.

#include <utility>
#include <vector>

#include "hexmetric/complex.hpp"
#include "hexmetric/hexagon.hpp"

namespace hexmetric {

/// Positive length per x-arc, indexed by x-arc id.
struct LengthStructure {
  std::vector<double> values;
  double operator[](int arc) const { return values[static_cast<std::size_t>(arc)]; }
  double& operator[](int arc) { return values[static_cast<std::size_t>(arc)]; }
};

/// t(w) = (x(w') + x(w'') - x(w)) / 2 per x-arc, indexed by x-arc id.
struct TCoordinate {
  std::vector<double> values;
  double operator[](int arc) const { return values[static_cast<std::size_t>(arc)]; }
  double& operator[](int arc) { return values[static_cast<std::size_t>(arc)]; }
};

/// One real per edge, indexed by edge id.
struct ECoordinate {
  std::vector<double> values;
  double operator[](int e) const { return values[static_cast<std::size_t>(e)]; }
  double& operator[](int e) { return values[static_cast<std::size_t>(e)]; }
};

TCoordinate t_of(const HexComplex& cx, const LengthStructure& x);

/// Inverse of t_of. Throws DomainError unless every pairwise sum inside a
/// 2-cell is positive.
LengthStructure x_of(const HexComplex& cx, const TCoordinate& t);

/// The t-triple (slots 0, 2, 4) of one hexagon.
TTriple cell_t(const TCoordinate& t, int hex);

/// z(e) = t(w) + t(w') over the two x-arcs facing e.
ECoordinate e_invariant(const HexComplex& cx, const LengthStructure& x);

/// The same invariant from x directly: half of (sum over the four adjacent
/// x-arcs minus sum over the two facing x-arcs).
ECoordinate e_invariant_from_lengths(const HexComplex& cx, const LengthStructure& x);

/// E-invariant of a t-coordinate (no positivity requirement).
ECoordinate e_invariant_of_t(const HexComplex& cx, const TCoordinate& t);

/// (sum of z over the cycle's edges, sum of x over the corner arcs of its steps).
std::pair<double, double> cycle_sum(const HexComplex& cx, const LengthStructure& x,
                                    const EdgeCycle& cycle);

/// Sum of z(e_i) over a cycle, counting repeated edges.
double cycle_z_sum(const ECoordinate& z, const EdgeCycle& cycle);

/// Facing-pair parametrization of the t-coordinates with E-invariant z: for
/// edge e with facing arcs (w_a, w_b), t(w_a) = z(e)/2 + s_e and
/// t(w_b) = z(e)/2 - s_e. Every x-arc faces exactly one edge, so this covers
/// all t with E-invariant z.
TCoordinate t_from_shifts(const HexComplex& cx, const ECoordinate& z,
                          const std::vector<double>& shifts);

/// s_e = (t(w_a) - t(w_b)) / 2.
std::vector<double> shifts_of(const HexComplex& cx, const TCoordinate& t);

/// Per boundary component, the total length of its x-arcs.
std::vector<double> boundary_lengths(const HexComplex& cx, const LengthStructure& x);

/// Per boundary component, the sum of z over its boundary edge cycle.
std::vector<double> boundary_values(const HexComplex& cx, const ECoordinate& z);

}  // namespace hexmetric
