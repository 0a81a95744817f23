#pragma once

#include <vector>

#include "dpg/rational.hpp"

namespace dpg {

// Dense LP in standard form: maximize c.x subject to A x <= b, x >= 0.
// Every right-hand side must be nonnegative, so the all-slack basis is
// feasible and a single simplex phase suffices.
struct LpProblem {
  std::vector<Rational> objective;               // length = variable count
  std::vector<std::vector<Rational>> rows;       // each of variable-count width
  std::vector<Rational> rhs;                     // one per row, >= 0
};

enum class LpStatus { optimal, unbounded };

struct LpResult {
  LpStatus status = LpStatus::optimal;
  Rational objective;
  std::vector<Rational> x;
};

// Exact rational simplex on a dense tableau with Bland's pivoting rule
// (termination without any perturbation or tolerance).
LpResult solve_lp_max(const LpProblem& problem);

}  // namespace dpg
