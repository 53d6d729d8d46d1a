#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dualdeg/rational.hpp"

namespace dualdeg {

enum class Rel { LE, GE, EQ };
enum class LPStatus { Optimal, Infeasible, Unbounded };
enum class SolverMode { Exact, FloatPresolveExactVerify };

struct LPRow {
  std::vector<Rational> a;  // dense over num_vars
  Rel rel = Rel::LE;
  Rational b;
};

struct LPInstance {
  int num_vars = 0;
  bool maximize = true;
  std::vector<Rational> objective;
  std::vector<LPRow> rows;
  std::vector<bool> nonneg;  // per variable; false = free
  // optional metadata tying columns/rows back to cube points or monomials
  std::vector<std::string> col_labels, row_labels;

  void check() const;
};

// Infeasibility certificate over the original rows: y_i >= 0 on LE rows,
// y_i <= 0 on GE rows, free on EQ rows, with  sum_i y_i a_i >= 0 on
// nonnegative variables, = 0 on free variables, and  y^T b < 0.
struct FarkasCertificate {
  std::vector<Rational> y;
};

struct LPSolution {
  LPStatus status = LPStatus::Infeasible;
  std::vector<Rational> x;
  Rational objective;
  // Optimal row multipliers y: sum_i y_i b_i equals the objective, and per
  // variable j, sum_i y_i a_ij >= c_j (maximize) or <= c_j (minimize) when
  // x_j is sign-constrained, with equality when x_j is free.
  std::vector<Rational> row_dual;
  std::optional<FarkasCertificate> farkas;
  long pivots = 0;
  bool presolve_used = false;
};

LPSolution solve_lp(const LPInstance& inst, SolverMode mode = SolverMode::Exact);

// Exact feasibility / certificate re-checks.
bool lp_point_feasible(const LPInstance& inst, const std::vector<Rational>& x);
bool lp_farkas_valid(const LPInstance& inst, const FarkasCertificate& f);
bool lp_duals_valid(const LPInstance& inst, const LPSolution& sol);

}  // namespace dualdeg
