#pragma once

#include <optional>
#include <vector>

#include "mps/allocation.hpp"
#include "mps/rational.hpp"

namespace mps {

struct Market;

struct Arc {
  int from = 0;
  int to = 0;
  Rat lower;
  Rat upper;
};

struct CirculationNetwork {
  int num_nodes = 0;
  std::vector<Arc> arcs;
};

// Flow values parallel to CirculationNetwork::arcs; conserving at every node
// and within the arc bounds.
struct Circulation {
  std::vector<Rat> flow;
  bool integral() const;
};

// Finds a feasible circulation, or nullopt when none exists. Lower bounds
// are removed by the standard excess/deficit reduction and the residual
// problem is solved as an exact rational max-flow. When every bound is an
// integer the returned flow is integral.
std::optional<Circulation> solve_circulation(const CirculationNetwork& net);

// Completion network for a partial allocation nu: a feasible circulation
// exists iff nu can be grown into a full allocation meeting demand, minimums
// and capacities. Node layout: 0 = source, 1 = sink, 2..2+N-1 agents,
// 2+N..2+N+O-1 objects; arcs are emitted source->agents, agent->object cells
// (row-major), objects->sink, then sink->source.
CirculationNetwork completion_network(const Market& market, const RandomAllocation& nu);

// Authoritative membership test for the set of sub-allocations extendable to
// an implementable allocation, at any demand.
bool lcs_member(const Market& market, const RandomAllocation& nu);

}  // namespace mps
