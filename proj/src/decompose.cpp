#include "mps/decompose.hpp"

#include <algorithm>

#include "mps/circulation.hpp"
#include "mps/constraints.hpp"
#include "mps/errors.hpp"
#include "mps/market.hpp"

namespace mps {

namespace {

// Extraction network: agent rows fixed at the demand, integral cells frozen,
// fractional cells free in {0,1}, and each column held inside the floor/
// ceiling of its current sum (tight columns must stay tight or the removal
// step could make no progress). All bounds are integers, so a feasible
// circulation is integral.
CirculationNetwork extraction_network(const Market& market, const RandomAllocation& mu) {
  const int n = market.num_agents();
  const int o = market.num_objects();
  CirculationNetwork net;
  net.num_nodes = 2 + n + o;
  const int source = 0, sink = 1;
  const auto agent_node = [](int i) { return 2 + i; };
  const auto object_node = [n](int j) { return 2 + n + j; };

  const Rat demand(market.demand);
  for (int i = 0; i < n; ++i) net.arcs.push_back({source, agent_node(i), demand, demand});
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < o; ++j) {
      const Rat& value = mu.at(i, j);
      if (is_integral(value))
        net.arcs.push_back({agent_node(i), object_node(j), value, value});
      else
        net.arcs.push_back({agent_node(i), object_node(j), Rat(0), Rat(1)});
    }
  }
  for (int j = 0; j < o; ++j) {
    const Rat column = mu.column_sum(j);
    const long lo = std::max<long>(market.objects[j].min, rat_floor(column));
    const long hi = std::min<long>(market.objects[j].cap, rat_ceil(column));
    net.arcs.push_back({object_node(j), sink, Rat(lo), Rat(hi)});
  }
  const Rat total = demand * n;
  net.arcs.push_back({sink, source, total, total});
  return net;
}

DeterministicAllocation extract_vertex(const Market& market, const RandomAllocation& mu) {
  const int n = market.num_agents();
  const int o = market.num_objects();
  CirculationNetwork net = extraction_network(market, mu);
  if (!solve_circulation(net))
    throw InternalError("decompose: extraction network infeasible");

  // Short-lottery bias: pin the largest fractional cells to 1 while that
  // stays feasible. Cell arcs sit right after the n agent arcs, row-major.
  std::vector<std::pair<Rat, int>> fractional;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < o; ++j)
      if (!is_integral(mu.at(i, j))) fractional.push_back({mu.at(i, j), i * o + j});
  std::sort(fractional.begin(), fractional.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  for (const auto& [value, cell] : fractional) {
    Arc& arc = net.arcs[n + cell];
    arc.lower = 1;
    if (!solve_circulation(net)) arc.lower = 0;
  }

  const auto flow = solve_circulation(net);
  if (!flow) throw InternalError("decompose: pinned network infeasible");

  DeterministicAllocation vertex(n, o);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < o; ++j) {
      const Rat& f = flow->flow[n + i * o + j];
      if (!is_integral(f) || (f != 0 && f != 1))
        throw InternalError("decompose: non-integral extraction flow");
      vertex.set(i, j, f == 1 ? 1 : 0);
    }
  }
  return vertex;
}

// Largest lambda keeping (mu - lambda * vertex) / (1 - lambda)
// implementable: per-cell ratios on fractional cells plus per-column ratios
// where the vertex moves a column off its current sum.
Rat removal_step(const Market& market, const RandomAllocation& mu,
                 const DeterministicAllocation& vertex) {
  Rat lambda(1);
  const auto shrink = [&lambda](const Rat& candidate) {
    if (candidate < lambda) lambda = candidate;
  };
  for (int i = 0; i < mu.agents(); ++i) {
    for (int j = 0; j < mu.objects(); ++j) {
      const Rat& value = mu.at(i, j);
      if (is_integral(value)) continue;
      if (vertex.at(i, j) == 1)
        shrink(value);
      else
        shrink(1 - value);
    }
  }
  for (int j = 0; j < mu.objects(); ++j) {
    const Rat column = mu.column_sum(j);
    const Rat target(vertex.column_sum(j));
    const Rat floor(market.objects[j].min);
    const Rat cap(market.objects[j].cap);
    if (target > floor) shrink((column - floor) / (target - floor));
    if (target < cap) shrink((cap - column) / (cap - target));
  }
  return lambda;
}

}  // namespace

RandomAllocation Lottery::combination(int agents, int objects) const {
  RandomAllocation total(agents, objects);
  for (const LotteryPart& part : parts)
    for (int i = 0; i < agents; ++i)
      for (int j = 0; j < objects; ++j) total.at(i, j) += part.weight * part.alloc.at(i, j);
  return total;
}

Lottery decompose(const Market& market, const RandomAllocation& mu) {
  if (!delta_d_system(market).contains(mu))
    throw ValidationError("decompose: allocation is not implementable");

  Lottery lottery;
  RandomAllocation current = mu;
  Rat remaining(1);
  while (true) {
    if (current.integral()) {
      DeterministicAllocation last(current.agents(), current.objects());
      for (int i = 0; i < current.agents(); ++i)
        for (int j = 0; j < current.objects(); ++j)
          last.set(i, j, current.at(i, j) == 1 ? 1 : 0);
      lottery.parts.push_back({remaining, std::move(last)});
      break;
    }

    const DeterministicAllocation vertex = extract_vertex(market, current);
    const Rat lambda = removal_step(market, current, vertex);
    if (lambda <= 0 || lambda >= 1)
      throw InternalError("decompose: removal step made no progress");

    lottery.parts.push_back({remaining * lambda, vertex});
    const Rat keep = 1 - lambda;
    for (int i = 0; i < current.agents(); ++i)
      for (int j = 0; j < current.objects(); ++j)
        current.at(i, j) = (current.at(i, j) - lambda * vertex.at(i, j)) / keep;
    remaining *= keep;
  }
  return lottery;
}

uint64_t splitmix64(uint64_t state) {
  state += 0x9E3779B97F4A7C15ULL;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::size_t sample_index(const Lottery& lottery, uint64_t seed) {
  if (lottery.parts.empty()) throw ValidationError("sample: empty lottery");
  const uint64_t raw = splitmix64(seed);
  Rat point(0);
  // point = raw / 2^64, exactly.
  mpz_class numerator;
  mpz_import(numerator.get_mpz_t(), 1, 1, sizeof(raw), 0, 0, &raw);
  mpz_class denominator(1);
  denominator <<= 64;
  point = Rat(numerator, denominator);

  Rat cumulative(0);
  for (std::size_t k = 0; k < lottery.parts.size(); ++k) {
    cumulative += lottery.parts[k].weight;
    if (point < cumulative) return k;
  }
  return lottery.parts.size() - 1;
}

const DeterministicAllocation& sample(const Lottery& lottery, uint64_t seed) {
  return lottery.parts[sample_index(lottery, seed)].alloc;
}

}  // namespace mps
