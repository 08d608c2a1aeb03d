#pragma once

#include <vector>

#include "mps/rational.hpp"

namespace mps {

enum class LpStatus { Optimal, Infeasible, Unbounded };

enum class RowSense { LessEq, GreaterEq, Equal };

struct LpRow {
  std::vector<Rat> coeffs;  // dense, size num_vars
  RowSense sense = RowSense::LessEq;
  Rat rhs;
};

// max objective . x  subject to the rows, x >= 0.
struct LpProblem {
  int num_vars = 0;
  std::vector<Rat> objective;
  std::vector<LpRow> rows;
};

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Rat objective;
  std::vector<Rat> x;
};

// Two-phase primal simplex on a dense exact-rational tableau. Bland's rule
// throughout, so no cycling; solutions are basic (vertices of the feasible
// polytope).
LpSolution solve_lp(const LpProblem& problem);

}  // namespace mps
