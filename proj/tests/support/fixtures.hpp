#pragma once

// Fixtures and random samplers shared by the unit and acceptance tests.

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "hexmetric/complex.hpp"
#include "hexmetric/coords.hpp"
#include "hexmetric/hexagon.hpp"
#include "hexmetric/polytope.hpp"

namespace hexmetric::testing {

// Two hexagons, each y-slot glued to the same slot of the other with flipped
// orientation: three cuffs, each made of two x-arcs.
inline ComplexSpec pants_spec() {
  return {2,
          {{{0, 1}, {1, 1}, true}, {{0, 3}, {1, 3}, true}, {{0, 5}, {1, 5}, true}},
          {}};
}

// Two hexagons glued coherently with a shift of two slots: one boundary
// component running through all six x-arcs.
inline ComplexSpec torus_spec() {
  return {2,
          {{{0, 1}, {1, 3}, false}, {{0, 3}, {1, 5}, false}, {{0, 5}, {1, 1}, false}},
          {}};
}

// Orientable, chi = -2, two boundary components (a one-holed torus with a
// second hole). Mirrors tests/data/four_hex.json.
inline ComplexSpec four_hex_spec() {
  return {4,
          {{{0, 1}, {1, 1}, false},
           {{0, 3}, {2, 3}, false},
           {{0, 5}, {3, 5}, true},
           {{1, 3}, {2, 1}, false},
           {{1, 5}, {3, 1}, true},
           {{2, 5}, {3, 3}, true}},
          {"a", "b", "c", "d", "e", "f"}};
}

struct NamedFixture {
  const char* name;
  HexComplex complex;
};

inline std::vector<NamedFixture> all_fixtures() {
  return {{"pants", HexComplex::build(pants_spec())},
          {"torus", HexComplex::build(torus_spec())},
          {"four_hex", HexComplex::build(four_hex_spec())}};
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline std::vector<double> uniform_vector(std::mt19937_64& rng, std::size_t n, double lo, double hi) {
  std::vector<double> v(n);
  for (double& x : v) x = uniform(rng, lo, hi);
  return v;
}

// A point of H3 with pairwise sums at least `margin`, entries in [-1, 2.5].
inline TTriple random_interior_t(std::mt19937_64& rng, double margin = 0.05) {
  for (;;) {
    TTriple t{uniform(rng, -1.0, 2.5), uniform(rng, -1.0, 2.5), uniform(rng, -1.0, 2.5)};
    if (pairwise_margin(t) >= margin) return t;
  }
}

inline LengthStructure random_lengths(const HexComplex& cx, std::mt19937_64& rng, double lo = 0.3,
                                      double hi = 3.0) {
  return LengthStructure{uniform_vector(rng, static_cast<std::size_t>(cx.xarc_count()), lo, hi)};
}

// Random shifts strictly inside the slice of t-coordinates with E-invariant z:
// a random fraction of the way from the max-margin point to the boundary
// along a random direction.
inline std::vector<double> random_interior_shifts(const HexComplex& cx, const ECoordinate& z,
                                                  std::mt19937_64& rng) {
  const InteriorPoint center = interior_point(cx, z);
  std::normal_distribution<double> normal;
  std::vector<double> d(center.shifts.size());
  for (double& v : d) v = normal(rng);
  auto at = [&](double a) {
    std::vector<double> s(center.shifts);
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += a * d[i];
    return s;
  };
  double lo = 0.0;
  double hi = 1.0;
  while (domain_margin(cx, t_from_shifts(cx, z, at(hi))) > 0.0 && hi < 1e3) hi *= 2.0;
  for (int k = 0; k < 80; ++k) {
    const double mid = 0.5 * (lo + hi);
    (domain_margin(cx, t_from_shifts(cx, z, at(mid))) > 0.0 ? lo : hi) = mid;
  }
  return at(uniform(rng, 0.1, 0.9) * lo);
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace hexmetric::testing
