#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mps/allocation.hpp"
#include "mps/constraints.hpp"
#include "mps/rational.hpp"

namespace mps {

struct Market;

struct StepCause {
  enum class Kind {
    CapClose,       // object reached its capacity
    MinSatisfied,   // deficient object reached its minimum
    GlobalMin,      // aggregate minimum reserve became binding
    Horizon,        // end of the eating interval
    RowBound,       // a cut row became binding (general-demand engine)
    CellSaturated,  // a single cell reached 1 (general-demand engine)
  };
  Kind kind;
  int object = -1;  // CapClose, MinSatisfied, CellSaturated
  int agent = -1;   // CellSaturated
  std::string row;  // RowBound label

  bool operator==(const StepCause&) const = default;
};

struct StepRecord {
  Rat start;
  Rat end;
  std::vector<int> available;  // objects open during the step (to anyone)
  std::vector<int> deficient;  // subset still short of their minimum
  std::vector<int> eating;     // per agent: object eaten during the step
  std::vector<StepCause> causes;

  bool has_cause(StepCause::Kind kind) const;
};

struct EatingTrace {
  std::vector<StepRecord> steps;
  // Time the aggregate minimum reserve locked the market, if it did. From
  // then on only deficient objects stay open; set at most once per run.
  std::optional<Rat> tau;
  std::vector<Rat> closing_times;  // per object; horizon if never closed

  // Sum of step durations per (agent, eaten object); equals the produced
  // allocation when the trace is consistent.
  RandomAllocation integrate(int agents, int objects) const;
};

struct MpsResult {
  RandomAllocation allocation;
  EatingTrace trace;
};

// Inputs of one discrete step of the unit-demand engine.
struct UnitStepState {
  Rat time;
  std::vector<char> available;  // per object
  std::vector<char> deficient;  // per object; subset of available
  std::vector<Rat> column;      // current column sums
  std::vector<int> eaters;      // agents whose favorite available object is j
};

struct Breakpoint {
  Rat time;
  std::vector<StepCause> causes;
};

// Earliest of: a non-deficient object filling its capacity, a deficient
// object meeting its minimum, the aggregate minimum reserve binding, and the
// horizon. Objects nobody eats never trigger. Throws on inconsistent state.
Breakpoint next_breakpoint(const Market& market, const UnitStepState& state);

// Unit-demand mechanism: every agent continuously eats probability of their
// favorite open object; objects close on capacity, and once the minimum
// reserve binds only objects still short of their minimum stay open.
// Discrete steps between breakpoints; at most 2 * objects + 2 of them.
MpsResult mps_unit(const Market& market);

// General-demand mechanism on the interval [0, demand]. Availability is per
// (agent, object): a cell closes when it saturates at 1 or any cut row
// through it binds. Event-driven and exact; row generation is exponential,
// hence the size cap.
MpsResult mps_general(const Market& market, const LcsOptions& options = {});

}  // namespace mps
