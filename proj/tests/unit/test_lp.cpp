#include <gtest/gtest.h>

#include "hexmetric/errors.hpp"
#include "hexmetric/lp.hpp"

using namespace hexmetric;

TEST(Lp, TextbookMaximum) {
  // max 3x + 5y s.t. x <= 4, 2y <= 12, 3x + 2y <= 18: optimum 36 at (2, 6).
  LinearProgram lp{{-3.0, -5.0},
                   {{{1.0, 0.0}, Relation::LessEqual, 4.0},
                    {{0.0, 2.0}, Relation::LessEqual, 12.0},
                    {{3.0, 2.0}, Relation::LessEqual, 18.0}}};
  const LpResult r = lp_solve(lp);
  ASSERT_EQ(r.status, LpStatus::Optimal);
  EXPECT_NEAR(r.value, -36.0, 1e-12);
  EXPECT_NEAR(r.x[0], 2.0, 1e-12);
  EXPECT_NEAR(r.x[1], 6.0, 1e-12);
}

TEST(Lp, EqualityAndGreaterEqual) {
  // min x + 2y + 3z s.t. x + y + z = 1, y + z >= 0.5.
  LinearProgram lp{{1.0, 2.0, 3.0},
                   {{{1.0, 1.0, 1.0}, Relation::Equal, 1.0},
                    {{0.0, 1.0, 1.0}, Relation::GreaterEqual, 0.5}}};
  const LpResult r = lp_solve(lp);
  ASSERT_EQ(r.status, LpStatus::Optimal);
  EXPECT_NEAR(r.value, 1.5, 1e-12);
  EXPECT_NEAR(r.x[1], 0.5, 1e-12);
}

TEST(Lp, NegativeRightHandSide) {
  // min x s.t. -x <= -3.
  LinearProgram lp{{1.0}, {{{-1.0}, Relation::LessEqual, -3.0}}};
  const LpResult r = lp_solve(lp);
  ASSERT_EQ(r.status, LpStatus::Optimal);
  EXPECT_NEAR(r.x[0], 3.0, 1e-12);
}

TEST(Lp, Infeasible) {
  LinearProgram lp{{1.0, 1.0},
                   {{{1.0, 1.0}, Relation::LessEqual, 1.0}, {{1.0, 1.0}, Relation::GreaterEqual, 2.0}}};
  EXPECT_EQ(lp_solve(lp).status, LpStatus::Infeasible);
}

TEST(Lp, Unbounded) {
  LinearProgram lp{{-1.0, 0.0}, {{{1.0, -1.0}, Relation::LessEqual, 1.0}}};
  EXPECT_EQ(lp_solve(lp).status, LpStatus::Unbounded);
}

TEST(Lp, RedundantEqualities) {
  LinearProgram lp{{1.0, 1.0},
                   {{{1.0, 1.0}, Relation::Equal, 2.0},
                    {{2.0, 2.0}, Relation::Equal, 4.0},
                    {{1.0, 0.0}, Relation::GreaterEqual, 0.5}}};
  const LpResult r = lp_solve(lp);
  ASSERT_EQ(r.status, LpStatus::Optimal);
  EXPECT_NEAR(r.value, 2.0, 1e-12);
}

TEST(Lp, BealeCyclingExampleTerminates) {
  // Cycles under the textbook largest-coefficient rule; Bland's rule terminates.
  LinearProgram lp{{-0.75, 150.0, -0.02, 6.0},
                   {{{0.25, -60.0, -0.04, 9.0}, Relation::LessEqual, 0.0},
                    {{0.5, -90.0, -0.02, 3.0}, Relation::LessEqual, 0.0},
                    {{0.0, 0.0, 1.0, 0.0}, Relation::LessEqual, 1.0}}};
  const LpResult r = lp_solve(lp);
  ASSERT_EQ(r.status, LpStatus::Optimal);
  EXPECT_NEAR(r.value, -0.05, 1e-12);
}

TEST(Lp, InputErrors) {
  LinearProgram bad{{1.0, 1.0}, {{{1.0}, Relation::LessEqual, 1.0}}};
  EXPECT_THROW(lp_solve(bad), ValidationError);
  LinearProgram big{std::vector<double>(10, 1.0), {}};
  for (int i = 0; i < 10; ++i) big.rows.push_back({std::vector<double>(10, 1.0), Relation::LessEqual, 1.0});
  LpOptions tight;
  tight.max_dimension = 15;
  EXPECT_THROW(lp_solve(big, tight), ValidationError);
}
