#pragma once

#include <string>
#include <vector>

#include "mps/allocation.hpp"
#include "mps/rational.hpp"

namespace mps {

struct Market;

struct Term {
  int agent = 0;
  int object = 0;
  Rat coeff;
};

// One nonnegative upper-bound row: sum of coeff * mu[agent][object] <= bound.
// Coefficients and bound are nonnegative, so once a row binds along a
// monotone eating path it binds forever.
struct Constraint {
  std::string label;
  std::vector<Term> terms;
  Rat bound;

  Rat lhs(const RandomAllocation& mu) const;
  bool holds(const RandomAllocation& mu) const { return lhs(mu) <= bound; }
  bool binds(const RandomAllocation& mu) const { return lhs(mu) == bound; }
};

struct ConstraintSystem {
  std::vector<Constraint> rows;

  bool holds(const RandomAllocation& mu) const;
  const Constraint* first_violated(const RandomAllocation& mu) const;
  const Constraint* find(std::string_view label) const;
};

// Marginal description of the implementable allocations: row-sum equalities,
// column capacity rows, and column minimum rows. Minimums are lower bounds,
// kept apart from the upper-bound rows so ConstraintSystem stays in
// nonnegative form.
struct DeltaDSystem {
  std::vector<Constraint> row_sums;  // lhs == bound (= demand)
  ConstraintSystem caps;             // column sum <= cap
  std::vector<Constraint> minimums;  // lhs >= bound (= min), minimum objects only

  // Equalities, caps, minimums, and the [0,1] box all hold.
  bool contains(const RandomAllocation& mu) const;
};

DeltaDSystem delta_d_system(const Market& market);

// Unit-demand description of the sub-allocations extendable to an
// implementable allocation: per-agent relaxed demand rows, per-object
// capacity rows, and one reserve row per subset S of minimum objects
// (consumption outside S is capped by the agent count minus the seats S's
// minimums reserve). Requires demand 1 and a feasible market.
ConstraintSystem lcs_system_unit(const Market& market);

struct MinCondition {
  bool holds = false;
  bool binds = false;
  Rat slack;  // agent count minus sum_j max(min_j, column_j)
};

// Aggregate minimum-reserve condition for unit demand:
// sum_j max(min_j, column_j) <= agent count.
MinCondition min_reserve_condition(const Market& market, const RandomAllocation& mu);

struct LcsOptions {
  int max_agents = 8;
  int max_objects = 8;
  bool prune = false;  // drop rows that can never bind inside the unit box
};

// General-demand description via cut rows indexed by an object subset S and
// an agent subset T: capacity cuts bound consumption of S by agents outside
// T, and minimum cuts bound consumption outside S by agents in T. Exponential
// in size and therefore capped. Requires a feasible market.
ConstraintSystem lcs_system_general(const Market& market, const LcsOptions& options = {});

}  // namespace mps
