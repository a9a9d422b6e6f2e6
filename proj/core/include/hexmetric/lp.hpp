#pragma once

// Small dense linear programs: minimize c.x subject to row constraints and
// x >= 0. Two-phase tableau simplex with Bland's anti-cycling rule; intended
// for a few hundred variables at most.

#include <vector>

namespace hexmetric {

enum class Relation { LessEqual, Equal, GreaterEqual };

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpRow {
  std::vector<double> coefficients;
  Relation relation = Relation::LessEqual;
  double rhs = 0.0;
};

struct LinearProgram {
  std::vector<double> objective;  // minimized; its size fixes the variable count
  std::vector<LpRow> rows;
};

struct LpOptions {
  double tolerance = 1e-11;
  int max_pivots = 100000;
  int max_dimension = 4000;  // rows + structural columns
};

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  double value = 0.0;
  std::vector<double> x;
  int pivots = 0;
};

/// Throws ValidationError on malformed input or when the problem exceeds
/// max_dimension, std::runtime_error if max_pivots is exhausted.
LpResult lp_solve(const LinearProgram& lp, const LpOptions& options = {});

}  // namespace hexmetric
