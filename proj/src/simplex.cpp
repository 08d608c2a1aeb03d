#include "mps/simplex.hpp"

#include "mps/errors.hpp"

namespace mps {

namespace {

// Dense tableau in canonical form: basis columns are unit vectors and both
// objective rows carry reduced costs. Row layout: m constraint rows, then
// the phase-2 objective row, then the phase-1 objective row.
class Tableau {
 public:
  Tableau(int rows, int cols) : rows_(rows), cols_(cols) {
    data_.assign(static_cast<std::size_t>(rows + 2) * (cols + 1), Rat(0));
  }

  Rat& at(int r, int c) { return data_[static_cast<std::size_t>(r) * (cols_ + 1) + c]; }
  const Rat& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * (cols_ + 1) + c]; }
  Rat& rhs(int r) { return at(r, cols_); }
  const Rat& rhs(int r) const { return at(r, cols_); }

  int obj_row() const { return rows_; }
  int phase1_row() const { return rows_ + 1; }

  void pivot(int pivot_row, int pivot_col) {
    const Rat inv = 1 / at(pivot_row, pivot_col);
    for (int c = 0; c <= cols_; ++c) at(pivot_row, c) *= inv;
    for (int r = 0; r < rows_ + 2; ++r) {
      if (r == pivot_row) continue;
      const Rat factor = at(r, pivot_col);
      if (factor == 0) continue;
      for (int c = 0; c <= cols_; ++c) at(r, c) -= factor * at(pivot_row, c);
    }
  }

  int rows_;
  int cols_;

 private:
  std::vector<Rat> data_;
};

}  // namespace

LpSolution solve_lp(const LpProblem& problem) {
  const int n = problem.num_vars;
  const int m = static_cast<int>(problem.rows.size());
  if (static_cast<int>(problem.objective.size()) != n)
    throw ValidationError("solve_lp: objective length mismatch");

  // Column layout: structural vars, then one slack/surplus per inequality,
  // then one artificial per row that needs one.
  int num_slacks = 0;
  for (const LpRow& row : problem.rows)
    if (row.sense != RowSense::Equal) ++num_slacks;

  std::vector<int> slack_col(m, -1);
  int next = n;
  for (int r = 0; r < m; ++r)
    if (problem.rows[r].sense != RowSense::Equal) slack_col[r] = next++;

  // Normalize to rhs >= 0, then decide which rows need an artificial: a
  // LessEq row with nonnegative rhs starts with its slack basic; all others
  // get an artificial.
  std::vector<int> sign(m, 1);
  std::vector<int> art_col(m, -1);
  int num_arts = 0;
  for (int r = 0; r < m; ++r) {
    const LpRow& row = problem.rows[r];
    if (row.rhs < 0) sign[r] = -1;
    const bool slack_usable =
        row.sense != RowSense::Equal &&
        ((row.sense == RowSense::LessEq && sign[r] == 1) ||
         (row.sense == RowSense::GreaterEq && sign[r] == -1));
    if (!slack_usable) art_col[r] = n + num_slacks + num_arts++;
  }

  const int cols = n + num_slacks + num_arts;
  Tableau tab(m, cols);
  std::vector<int> basis(m, -1);

  for (int r = 0; r < m; ++r) {
    const LpRow& row = problem.rows[r];
    if (static_cast<int>(row.coeffs.size()) != n)
      throw ValidationError("solve_lp: row length mismatch");
    for (int c = 0; c < n; ++c) tab.at(r, c) = sign[r] * row.coeffs[c];
    tab.rhs(r) = sign[r] * row.rhs;
    if (slack_col[r] >= 0)
      tab.at(r, slack_col[r]) = Rat((row.sense == RowSense::LessEq ? 1 : -1) * sign[r]);
    if (art_col[r] >= 0) {
      tab.at(r, art_col[r]) = 1;
      basis[r] = art_col[r];
    } else {
      basis[r] = slack_col[r];
    }
  }

  // Phase-2 reduced costs for minimizing -objective.
  for (int c = 0; c < n; ++c) tab.at(tab.obj_row(), c) = -problem.objective[c];
  // Phase-1 reduced costs: cost 1 on artificials, canonicalized by
  // subtracting every artificial row so basic columns read zero.
  for (int r = 0; r < m; ++r)
    if (art_col[r] >= 0) tab.at(tab.phase1_row(), art_col[r]) = 1;
  for (int r = 0; r < m; ++r) {
    if (art_col[r] < 0) continue;
    for (int c = 0; c <= cols; ++c) tab.at(tab.phase1_row(), c) -= tab.at(r, c);
  }

  const auto run_phase = [&](int objective_row, bool allow_artificials) -> bool {
    while (true) {
      // Bland: entering column = lowest index with a negative reduced cost.
      int entering = -1;
      const int limit = allow_artificials ? cols : n + num_slacks;
      for (int c = 0; c < limit; ++c) {
        if (tab.at(objective_row, c) < 0) {
          entering = c;
          break;
        }
      }
      if (entering < 0) return true;

      int leaving = -1;
      Rat best_ratio;
      for (int r = 0; r < m; ++r) {
        if (tab.at(r, entering) <= 0) continue;
        Rat ratio = tab.rhs(r) / tab.at(r, entering);
        if (leaving < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis[r] < basis[leaving])) {
          leaving = r;
          best_ratio = ratio;
        }
      }
      if (leaving < 0) return false;  // unbounded in this direction

      tab.pivot(leaving, entering);
      basis[leaving] = entering;
    }
  };

  LpSolution solution;
  if (num_arts > 0) {
    if (!run_phase(tab.phase1_row(), true))
      throw InternalError("solve_lp: phase 1 unbounded");
    if (tab.rhs(tab.phase1_row()) != 0) {
      solution.status = LpStatus::Infeasible;
      return solution;
    }
    // Pivot leftover artificials out of the basis; a row with no usable
    // pivot is redundant and stays harmlessly degenerate.
    for (int r = 0; r < m; ++r) {
      if (basis[r] < n + num_slacks) continue;
      for (int c = 0; c < n + num_slacks; ++c) {
        if (tab.at(r, c) != 0) {
          tab.pivot(r, c);
          basis[r] = c;
          break;
        }
      }
    }
  }

  if (!run_phase(tab.obj_row(), false)) {
    solution.status = LpStatus::Unbounded;
    return solution;
  }

  solution.status = LpStatus::Optimal;
  solution.x.assign(n, Rat(0));
  for (int r = 0; r < m; ++r)
    if (basis[r] >= 0 && basis[r] < n) solution.x[basis[r]] = tab.rhs(r);
  solution.objective = 0;
  for (int c = 0; c < n; ++c) solution.objective += problem.objective[c] * solution.x[c];
  return solution;
}

}  // namespace mps
