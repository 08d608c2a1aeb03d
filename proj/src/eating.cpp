#include "mps/eating.hpp"

#include <algorithm>

#include "mps/circulation.hpp"
#include "mps/errors.hpp"
#include "mps/market.hpp"

namespace mps {

namespace {

constexpr int kNone = -1;

std::vector<int> flags_to_indices(const std::vector<char>& flags) {
  std::vector<int> out;
  for (int k = 0; k < static_cast<int>(flags.size()); ++k)
    if (flags[k]) out.push_back(k);
  return out;
}

// Favorite available object per agent; every agent has one while any object
// is open (preference lists are complete).
std::vector<int> favorites(const Market& market, const std::vector<char>& available) {
  std::vector<int> eating(market.num_agents(), kNone);
  for (int i = 0; i < market.num_agents(); ++i) {
    for (int j : market.prefs[i]) {
      if (available[j]) {
        eating[i] = j;
        break;
      }
    }
  }
  return eating;
}

StepCause make_cause(StepCause::Kind kind, int object = -1, int agent = -1) {
  StepCause cause;
  cause.kind = kind;
  cause.object = object;
  cause.agent = agent;
  return cause;
}

Rat min_reserve_slack(const Market& market, const std::vector<char>& deficient,
                      const std::vector<Rat>& column) {
  Rat slack(market.num_agents());
  for (int j = 0; j < market.num_objects(); ++j) {
    if (deficient[j])
      slack -= market.objects[j].min;
    else
      slack -= column[j];
  }
  return slack;
}

}  // namespace

bool StepRecord::has_cause(StepCause::Kind kind) const {
  return std::any_of(causes.begin(), causes.end(),
                     [kind](const StepCause& c) { return c.kind == kind; });
}

RandomAllocation EatingTrace::integrate(int agents, int objects) const {
  RandomAllocation total(agents, objects);
  for (const StepRecord& step : steps) {
    const Rat span = step.end - step.start;
    for (int i = 0; i < agents; ++i)
      if (step.eating[i] != kNone) total.at(i, step.eating[i]) += span;
  }
  return total;
}

Breakpoint next_breakpoint(const Market& market, const UnitStepState& state) {
  const int o = market.num_objects();
  if (state.time >= 1) throw ValidationError("next_breakpoint: time must be below the horizon");
  for (int j = 0; j < o; ++j) {
    if (state.deficient[j] && !state.available[j])
      throw ValidationError("next_breakpoint: deficient object marked unavailable");
    if (state.available[j] && !state.deficient[j] && state.column[j] >= market.objects[j].cap)
      throw ValidationError("next_breakpoint: available object already at capacity");
    if (state.deficient[j] && state.column[j] >= market.objects[j].min)
      throw ValidationError("next_breakpoint: deficient object already at its minimum");
  }

  Breakpoint result;
  result.time = 1;
  result.causes = {make_cause(StepCause::Kind::Horizon)};
  const auto consider = [&result](const Rat& t, StepCause cause) {
    if (t > result.time) return;
    if (t < result.time) {
      result.time = t;
      result.causes.clear();
    }
    result.causes.push_back(std::move(cause));
  };

  int outside_eaters = 0;  // agents eating objects past their minimum
  for (int j = 0; j < o; ++j) {
    if (!state.available[j] || state.eaters[j] == 0) continue;
    const Rat pace(state.eaters[j]);
    if (state.deficient[j]) {
      consider(state.time + (Rat(market.objects[j].min) - state.column[j]) / pace,
               make_cause(StepCause::Kind::MinSatisfied, j));
    } else {
      outside_eaters += state.eaters[j];
      consider(state.time + (Rat(market.objects[j].cap) - state.column[j]) / pace,
               make_cause(StepCause::Kind::CapClose, j));
    }
  }
  if (outside_eaters > 0) {
    const Rat slack = min_reserve_slack(market, state.deficient, state.column);
    consider(state.time + slack / outside_eaters, make_cause(StepCause::Kind::GlobalMin));
  }
  return result;
}

MpsResult mps_unit(const Market& market) {
  if (market.demand != 1) throw ValidationError("mps_unit: demand must be 1");
  if (!validate_feasibility(market).feasible) throw InfeasibleError("mps_unit: market is infeasible");

  const int n = market.num_agents();
  const int o = market.num_objects();

  UnitStepState state;
  state.time = 0;
  state.available.assign(o, 1);
  state.deficient.assign(o, 0);
  state.column.assign(o, Rat(0));
  for (int j : market.minimum_objects()) state.deficient[j] = 1;

  RandomAllocation mu(n, o);
  EatingTrace trace;
  trace.closing_times.assign(o, Rat(-1));
  bool reserve_locked = false;

  const auto close_object = [&](int j, const Rat& when) {
    if (state.available[j]) {
      state.available[j] = 0;
      trace.closing_times[j] = when;
    }
  };
  const auto lock_reserve = [&](const Rat& when) {
    reserve_locked = true;
    trace.tau = when;
    for (int j = 0; j < o; ++j)
      if (state.available[j] && !state.deficient[j]) close_object(j, when);
  };

  // A market whose minimums use the whole budget starts locked: if anyone
  // would otherwise eat past-minimum mass, the reserve binds at t = 0.
  if (min_reserve_slack(market, state.deficient, state.column) == 0) {
    const std::vector<int> eating = favorites(market, state.available);
    for (int j : eating) {
      if (j != kNone && !state.deficient[j]) {
        lock_reserve(Rat(0));
        break;
      }
    }
  }

  while (state.time < 1) {
    state.eaters.assign(o, 0);
    const std::vector<int> eating = favorites(market, state.available);
    for (int i = 0; i < n; ++i) {
      if (eating[i] == kNone) throw InternalError("mps_unit: an agent has nothing left to eat");
      ++state.eaters[eating[i]];
    }

    const Breakpoint bp = next_breakpoint(market, state);
    StepRecord step;
    step.start = state.time;
    step.end = bp.time;
    step.available = flags_to_indices(state.available);
    step.deficient = flags_to_indices(state.deficient);
    step.eating = eating;
    step.causes = bp.causes;

    const Rat span = bp.time - state.time;
    for (int i = 0; i < n; ++i) {
      mu.at(i, eating[i]) += span;
      state.column[eating[i]] += span;
    }

    if (step.has_cause(StepCause::Kind::GlobalMin)) lock_reserve(bp.time);
    for (const StepCause& cause : step.causes)
      if (cause.kind == StepCause::Kind::MinSatisfied) state.deficient[cause.object] = 0;
    if (reserve_locked) {
      for (int j = 0; j < o; ++j)
        if (state.available[j] && !state.deficient[j]) close_object(j, bp.time);
    } else {
      for (const StepCause& cause : step.causes)
        if (cause.kind == StepCause::Kind::CapClose) close_object(cause.object, bp.time);
      // A deficient object can hit its capacity the instant its minimum is
      // met (min == cap); close it in the same step.
      for (int j = 0; j < o; ++j)
        if (state.available[j] && !state.deficient[j] && state.column[j] == market.objects[j].cap)
          close_object(j, bp.time);
    }

    // The reserve can become binding exactly when minimums are met or caps
    // close; fold the lock into this step rather than emitting a
    // zero-length one.
    if (!reserve_locked && bp.time < 1 &&
        min_reserve_slack(market, state.deficient, state.column) == 0) {
      const std::vector<int> next_eating = favorites(market, state.available);
      for (int j : next_eating) {
        if (j != kNone && !state.deficient[j]) {
          step.causes.push_back(make_cause(StepCause::Kind::GlobalMin));
          lock_reserve(bp.time);
          break;
        }
      }
    }

    trace.steps.push_back(std::move(step));
    state.time = bp.time;
  }

  for (int j = 0; j < o; ++j)
    if (trace.closing_times[j] < 0) trace.closing_times[j] = 1;
  return {std::move(mu), std::move(trace)};
}

MpsResult mps_general(const Market& market, const LcsOptions& options) {
  if (!validate_feasibility(market).feasible)
    throw InfeasibleError("mps_general: market is infeasible");

  LcsOptions pruned = options;
  pruned.prune = true;
  const ConstraintSystem system = lcs_system_general(market, pruned);

  const int n = market.num_agents();
  const int o = market.num_objects();
  const Rat horizon(market.demand);

  // Row lookup per cell, and running left-hand sides.
  std::vector<std::vector<std::vector<int>>> rows_at(
      n, std::vector<std::vector<int>>(o));
  for (int r = 0; r < static_cast<int>(system.rows.size()); ++r)
    for (const Term& term : system.rows[r].terms) rows_at[term.agent][term.object].push_back(r);
  std::vector<Rat> lhs(system.rows.size(), Rat(0));

  RandomAllocation mu(n, o);
  EatingTrace trace;
  trace.closing_times.assign(o, Rat(-1));

  const auto cell_open = [&](int i, int j) {
    if (mu.at(i, j) == 1) return false;
    for (int r : rows_at[i][j])
      if (lhs[r] == system.rows[r].bound) return false;
    return true;
  };

  Rat time(0);
  std::vector<char> was_available(o, 1);
  while (time < horizon) {
    std::vector<int> eating(n, kNone);
    std::vector<char> open_object(o, 0);
    for (int i = 0; i < n; ++i) {
      for (int j : market.prefs[i]) {
        if (cell_open(i, j)) {
          if (eating[i] == kNone) eating[i] = j;
          open_object[j] = 1;
        }
      }
      if (eating[i] == kNone)
        throw InternalError("mps_general: an agent has nothing left to eat");
    }
    for (int j = 0; j < o; ++j) {
      if (was_available[j] && !open_object[j]) {
        trace.closing_times[j] = time;
        was_available[j] = 0;
      }
    }

    std::vector<int> rate(system.rows.size(), 0);
    for (int i = 0; i < n; ++i)
      for (int r : rows_at[i][eating[i]]) ++rate[r];

    Rat end = horizon;
    std::vector<StepCause> causes = {make_cause(StepCause::Kind::Horizon)};
    const auto consider = [&](const Rat& t, StepCause cause) {
      if (t > end) return;
      if (t < end) {
        end = t;
        causes.clear();
      }
      causes.push_back(std::move(cause));
    };
    for (int r = 0; r < static_cast<int>(system.rows.size()); ++r) {
      if (rate[r] == 0) continue;
      StepCause cause = make_cause(StepCause::Kind::RowBound);
      cause.row = system.rows[r].label;
      consider(time + (system.rows[r].bound - lhs[r]) / rate[r], std::move(cause));
    }
    for (int i = 0; i < n; ++i) {
      StepCause cause = make_cause(StepCause::Kind::CellSaturated, eating[i], i);
      consider(time + (Rat(1) - mu.at(i, eating[i])), std::move(cause));
    }

    StepRecord step;
    step.start = time;
    step.end = end;
    step.available = flags_to_indices(open_object);
    for (int j = 0; j < o; ++j)
      if (mu.column_sum(j) < market.objects[j].min) step.deficient.push_back(j);
    step.eating = eating;
    step.causes = causes;
    trace.steps.push_back(std::move(step));

    const Rat span = end - time;
    for (int i = 0; i < n; ++i) mu.at(i, eating[i]) += span;
    for (int r = 0; r < static_cast<int>(system.rows.size()); ++r) lhs[r] += span * rate[r];
    time = end;
  }

  for (int j = 0; j < o; ++j)
    if (trace.closing_times[j] < 0) trace.closing_times[j] = horizon;
  return {std::move(mu), std::move(trace)};
}

}  // namespace mps
