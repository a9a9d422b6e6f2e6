#include "hexmetric/lp.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "hexmetric/errors.hpp"

namespace hexmetric {

namespace {

class Tableau {
 public:
  Tableau(int rows, int cols)
      : rows_(rows), cols_(cols), cells_(static_cast<std::size_t>((rows + 1) * (cols + 1)), 0.0),
        basis_(static_cast<std::size_t>(rows), -1) {}

  double& at(int r, int c) { return cells_[static_cast<std::size_t>(r * (cols_ + 1) + c)]; }
  double& rhs(int r) { return at(r, cols_); }
  double& cost(int c) { return at(rows_, c); }
  double& objective_rhs() { return at(rows_, cols_); }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int& basis(int r) { return basis_[static_cast<std::size_t>(r)]; }

  void pivot(int r, int c) {
    const double inv = 1.0 / at(r, c);
    for (int j = 0; j <= cols_; ++j) at(r, j) *= inv;
    at(r, c) = 1.0;
    for (int i = 0; i <= rows_; ++i) {
      if (i == r) continue;
      const double factor = at(i, c);
      if (factor == 0.0) continue;
      for (int j = 0; j <= cols_; ++j) at(i, j) -= factor * at(r, j);
      at(i, c) = 0.0;
    }
    basis(r) = c;
  }

  // Removes row r by swapping it with the last constraint row.
  void drop_row(int r) {
    const int last = rows_ - 1;
    if (r != last) {
      for (int j = 0; j <= cols_; ++j) std::swap(at(r, j), at(last, j));
      std::swap(basis_[static_cast<std::size_t>(r)], basis_[static_cast<std::size_t>(last)]);
    }
    // Move the objective row up one slot.
    for (int j = 0; j <= cols_; ++j) at(last, j) = at(rows_, j);
    --rows_;
    basis_.pop_back();
  }

 private:
  int rows_;
  int cols_;
  std::vector<double> cells_;
  std::vector<int> basis_;
};

enum class PhaseOutcome { Optimal, Unbounded };

// Bland: smallest improving column enters; ratio ties go to the smallest basic index.
PhaseOutcome run_simplex(Tableau& tab, int allowed_cols, const LpOptions& opt, int& pivots) {
  while (true) {
    int enter = -1;
    for (int j = 0; j < allowed_cols; ++j) {
      if (tab.cost(j) < -opt.tolerance) {
        enter = j;
        break;
      }
    }
    if (enter < 0) return PhaseOutcome::Optimal;

    int leave = -1;
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < tab.rows(); ++i) {
      const double a = tab.at(i, enter);
      if (a <= opt.tolerance) continue;
      const double ratio = tab.rhs(i) / a;
      if (ratio < best - opt.tolerance ||
          (ratio <= best + opt.tolerance && leave >= 0 && tab.basis(i) < tab.basis(leave))) {
        if (ratio < best) best = ratio;
        leave = i;
      }
    }
    if (leave < 0) return PhaseOutcome::Unbounded;
    if (++pivots > opt.max_pivots) {
      throw std::runtime_error("lp_solve: pivot limit exceeded");
    }
    tab.pivot(leave, enter);
  }
}

}  // namespace

LpResult lp_solve(const LinearProgram& lp, const LpOptions& options) {
  const int n = static_cast<int>(lp.objective.size());
  const int m = static_cast<int>(lp.rows.size());
  if (n == 0) throw ValidationError("lp_solve: no variables");
  if (n + m > options.max_dimension) {
    throw ValidationError("lp_solve: problem size " + std::to_string(n + m) +
                          " exceeds max_dimension " + std::to_string(options.max_dimension));
  }

  // Column layout: structural [0, n), slack/surplus [n, n + s), artificial [n + s, total).
  int slack_count = 0;
  int artificial_count = 0;
  for (const LpRow& row : lp.rows) {
    if (row.coefficients.size() != static_cast<std::size_t>(n)) {
      throw ValidationError("lp_solve: row width does not match objective");
    }
    Relation rel = row.relation;
    if (row.rhs < 0.0 && rel != Relation::Equal) {
      rel = rel == Relation::LessEqual ? Relation::GreaterEqual : Relation::LessEqual;
    }
    if (rel != Relation::Equal) ++slack_count;
    if (rel != Relation::LessEqual) ++artificial_count;
  }
  const int art_begin = n + slack_count;
  const int total = art_begin + artificial_count;

  Tableau tab(m, total);
  int next_slack = n;
  int next_art = art_begin;
  for (int i = 0; i < m; ++i) {
    const LpRow& row = lp.rows[static_cast<std::size_t>(i)];
    const double sign = row.rhs < 0.0 ? -1.0 : 1.0;
    Relation rel = row.relation;
    if (sign < 0.0 && rel != Relation::Equal) {
      rel = rel == Relation::LessEqual ? Relation::GreaterEqual : Relation::LessEqual;
    }
    for (int j = 0; j < n; ++j) tab.at(i, j) = sign * row.coefficients[static_cast<std::size_t>(j)];
    tab.rhs(i) = sign * row.rhs;
    if (rel == Relation::LessEqual) {
      tab.at(i, next_slack) = 1.0;
      tab.basis(i) = next_slack++;
    } else {
      if (rel == Relation::GreaterEqual) tab.at(i, next_slack++) = -1.0;
      tab.at(i, next_art) = 1.0;
      tab.basis(i) = next_art++;
    }
  }

  LpResult result;

  // Phase 1: minimize the sum of artificials.
  if (artificial_count > 0) {
    for (int j = art_begin; j < total; ++j) tab.cost(j) = 1.0;
    for (int i = 0; i < tab.rows(); ++i) {
      if (tab.basis(i) >= art_begin) {
        for (int j = 0; j <= total; ++j) tab.at(tab.rows(), j) -= tab.at(i, j);
      }
    }
    run_simplex(tab, total, options, result.pivots);
    const double infeasibility = -tab.objective_rhs();
    if (infeasibility > 1e-9) {
      result.status = LpStatus::Infeasible;
      return result;
    }
    // Drive remaining (zero-level) artificials out of the basis.
    for (int i = tab.rows() - 1; i >= 0; --i) {
      if (tab.basis(i) < art_begin) continue;
      int col = -1;
      for (int j = 0; j < art_begin; ++j) {
        if (std::abs(tab.at(i, j)) > 1e-9) {
          col = j;
          break;
        }
      }
      if (col >= 0) {
        tab.pivot(i, col);
      } else {
        tab.drop_row(i);  // redundant equality
      }
    }
  }

  // Phase 2 with the true objective, artificials barred from entering.
  for (int j = 0; j <= total; ++j) tab.cost(j) = 0.0;
  for (int j = 0; j < n; ++j) tab.cost(j) = lp.objective[static_cast<std::size_t>(j)];
  for (int i = 0; i < tab.rows(); ++i) {
    const int b = tab.basis(i);
    const double cb = tab.cost(b);
    if (cb == 0.0) continue;
    for (int j = 0; j <= total; ++j) tab.at(tab.rows(), j) -= cb * tab.at(i, j);
  }
  if (run_simplex(tab, art_begin, options, result.pivots) == PhaseOutcome::Unbounded) {
    result.status = LpStatus::Unbounded;
    return result;
  }

  result.status = LpStatus::Optimal;
  result.x.assign(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < tab.rows(); ++i) {
    if (tab.basis(i) < n) result.x[static_cast<std::size_t>(tab.basis(i))] = tab.rhs(i);
  }
  result.value = 0.0;
  for (int j = 0; j < n; ++j) {
    result.value += lp.objective[static_cast<std::size_t>(j)] * result.x[static_cast<std::size_t>(j)];
  }
  return result;
}

}  // namespace hexmetric
