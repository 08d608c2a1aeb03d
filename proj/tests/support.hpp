#pragma once

// Shared fixtures and deterministic generators for the test suites.

#include <cstdint>
#include <string>
#include <vector>

#include "mps/allocation.hpp"
#include "mps/circulation.hpp"
#include "mps/decompose.hpp"
#include "mps/market.hpp"

namespace testsup {

// Deterministic cross-platform generator chained off splitmix64.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  int below(int bound) { return static_cast<int>(next() % static_cast<uint64_t>(bound)); }

  std::vector<int> permutation(int size) {
    std::vector<int> out(size);
    for (int k = 0; k < size; ++k) out[k] = k;
    for (int k = size - 1; k > 0; --k) std::swap(out[k], out[below(k + 1)]);
    return out;
  }

 private:
  uint64_t state_;
};

inline mps::Market make_market(int demand, std::vector<mps::ObjectSpec> objects,
                               std::vector<std::vector<int>> prefs) {
  mps::Market market;
  market.demand = demand;
  market.objects = std::move(objects);
  market.prefs = std::move(prefs);
  for (std::size_t i = 0; i < market.prefs.size(); ++i)
    market.agent_ids.push_back("a" + std::to_string(i + 1));
  mps::validate_market(market);
  return market;
}

// Three agents; the first two objects carry a minimum of one. Two agents
// chase o1 while the third starts on o3, so the aggregate minimum reserve
// locks the market mid-run.
inline mps::Market three_agent_minimums_market() {
  return make_market(1,
                     {{"o1", 1, 2}, {"o2", 1, 2}, {"o3", 0, 2}},
                     {{0, 1, 2}, {0, 1, 2}, {2, 0, 1}});
}

inline const char* three_agent_minimums_json() {
  return R"({
    "d": 1,
    "objects": [
      {"id": "o1", "min": 1, "cap": 2},
      {"id": "o2", "min": 1, "cap": 2},
      {"id": "o3", "min": 0, "cap": 2}
    ],
    "agents": [
      {"id": "a1", "prefs": ["o1", "o2", "o3"]},
      {"id": "a2", "prefs": ["o1", "o2", "o3"]},
      {"id": "a3", "prefs": ["o3", "o1", "o2"]}
    ]
  })";
}

// Four agents, four unit-capacity objects, no minimums: the classic market
// where the serial-dictatorship lottery is dominated.
inline mps::Market four_agent_unit_caps_market() {
  return make_market(1,
                     {{"o1", 0, 1}, {"o2", 0, 1}, {"o3", 0, 1}, {"o4", 0, 1}},
                     {{0, 1, 2, 3}, {0, 1, 2, 3}, {1, 0, 3, 2}, {1, 0, 3, 2}});
}

inline mps::RandomAllocation matrix(const std::vector<std::vector<const char*>>& rows) {
  mps::RandomAllocation out(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < out.agents(); ++i)
    for (int j = 0; j < out.objects(); ++j) out.at(i, j) = mps::parse_rat(rows[i][j]);
  return out;
}

// Random market with the requested demand, clamped caps, minimums that stay
// circulation-feasible, and uniformly drawn strict preferences.
inline mps::Market random_feasible_market(Rng& rng, int num_agents, int num_objects, int demand) {
  while (true) {
    std::vector<mps::ObjectSpec> objects;
    for (int j = 0; j < num_objects; ++j) {
      mps::ObjectSpec spec;
      spec.id = "o" + std::to_string(j + 1);
      spec.cap = 1 + rng.below(num_agents);
      spec.min = rng.below(spec.cap + 1);
      if (rng.below(2)) spec.min = 0;  // keep plenty of unconstrained objects
      objects.push_back(spec);
    }
    std::vector<std::vector<int>> prefs;
    for (int i = 0; i < num_agents; ++i) prefs.push_back(rng.permutation(num_objects));
    mps::Market market = make_market(demand, std::move(objects), std::move(prefs));
    if (mps::validate_feasibility(market).feasible) return market;
  }
}

// Sub-random matrix on a small rational grid: entries k/6, rows scaled back
// into the demand budget when they overshoot.
inline mps::RandomAllocation random_subrandom(Rng& rng, const mps::Market& market) {
  mps::RandomAllocation nu(market.num_agents(), market.num_objects());
  for (int i = 0; i < market.num_agents(); ++i) {
    mps::Rat row_sum(0);
    for (int j = 0; j < market.num_objects(); ++j) {
      nu.at(i, j) = mps::rat(rng.below(7), 6);
      row_sum += nu.at(i, j);
    }
    const mps::Rat budget(market.demand);
    if (row_sum > budget) {
      for (int j = 0; j < market.num_objects(); ++j)
        nu.at(i, j) = nu.at(i, j) * budget / row_sum;
    }
  }
  return nu;
}

}  // namespace testsup
