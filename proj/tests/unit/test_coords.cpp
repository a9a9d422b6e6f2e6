#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "hexmetric/coords.hpp"
#include "hexmetric/errors.hpp"

using namespace hexmetric;
using namespace hexmetric::testing;

TEST(Coords, TAndXAreInverse) {
  std::mt19937_64 rng(21);
  for (const auto& [name, cx] : all_fixtures()) {
    for (int k = 0; k < 50; ++k) {
      const LengthStructure x = random_lengths(cx, rng);
      const LengthStructure back = x_of(cx, t_of(cx, x));
      EXPECT_LT(max_abs_diff(back.values, x.values), 1e-14) << name;
    }
  }
}

TEST(Coords, EInvariantTwoWays) {
  std::mt19937_64 rng(22);
  for (const auto& [name, cx] : all_fixtures()) {
    for (int k = 0; k < 50; ++k) {
      const LengthStructure x = random_lengths(cx, rng);
      EXPECT_LT(max_abs_diff(e_invariant(cx, x).values, e_invariant_from_lengths(cx, x).values), 1e-13)
          << name;
    }
  }
}

TEST(Coords, PantsUnitLengths) {
  const HexComplex cx = HexComplex::build(pants_spec());
  const LengthStructure x{std::vector<double>(6, 1.0)};
  const ECoordinate z = e_invariant(cx, x);
  for (double v : z.values) EXPECT_DOUBLE_EQ(v, 1.0);
  for (double b : boundary_lengths(cx, x)) EXPECT_DOUBLE_EQ(b, 2.0);
  for (double b : boundary_values(cx, z)) EXPECT_DOUBLE_EQ(b, 2.0);
}

TEST(Coords, ShiftsRoundTrip) {
  std::mt19937_64 rng(23);
  for (const auto& [name, cx] : all_fixtures()) {
    for (int k = 0; k < 20; ++k) {
      const TCoordinate t = t_of(cx, random_lengths(cx, rng));
      const ECoordinate z = e_invariant_of_t(cx, t);
      const TCoordinate back = t_from_shifts(cx, z, shifts_of(cx, t));
      EXPECT_LT(max_abs_diff(back.values, t.values), 1e-14) << name;
      // Any shifts keep the E-invariant.
      const auto s = uniform_vector(rng, static_cast<std::size_t>(cx.edge_count()), -2.0, 2.0);
      EXPECT_LT(max_abs_diff(e_invariant_of_t(cx, t_from_shifts(cx, z, s)).values, z.values), 1e-14);
    }
  }
}

TEST(Coords, CycleSumIdentity) {
  std::mt19937_64 rng(24);
  for (const auto& [name, cx] : all_fixtures()) {
    const auto cycles = cx.enumerate_fundamental_cycles(10000).cycles;
    for (int k = 0; k < 20; ++k) {
      const LengthStructure x = random_lengths(cx, rng);
      for (const auto& c : cycles) {
        const auto [zsum, arcs] = cycle_sum(cx, x, c);
        EXPECT_NEAR(zsum, arcs, 1e-12) << name;
        EXPECT_GT(zsum, 0.0);
      }
    }
  }
}

TEST(Coords, BoundaryValuesAreBoundaryLengths) {
  std::mt19937_64 rng(25);
  for (const auto& [name, cx] : all_fixtures()) {
    const LengthStructure x = random_lengths(cx, rng);
    const auto lengths = boundary_lengths(cx, x);
    const auto values = boundary_values(cx, e_invariant(cx, x));
    ASSERT_EQ(lengths.size(), values.size());
    for (std::size_t i = 0; i < lengths.size(); ++i) EXPECT_NEAR(values[i], lengths[i], 1e-12) << name;
  }
}

TEST(Coords, Errors) {
  const HexComplex cx = HexComplex::build(pants_spec());
  EXPECT_THROW(t_of(cx, LengthStructure{{1.0, 1.0}}), ValidationError);
  TCoordinate bad{{1.0, -1.0, 0.5, 1.0, 1.0, 1.0}};
  EXPECT_THROW(x_of(cx, bad), DomainError);
  EXPECT_THROW(t_from_shifts(cx, ECoordinate{{1.0, 1.0, 1.0}}, {0.0}), ValidationError);
}
