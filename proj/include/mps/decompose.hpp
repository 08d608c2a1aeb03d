#pragma once

#include <cstdint>
#include <vector>

#include "mps/allocation.hpp"
#include "mps/rational.hpp"

namespace mps {

struct Market;

struct LotteryPart {
  Rat weight;  // positive; all weights sum to 1
  DeterministicAllocation alloc;
};

// Convex combination of allowable deterministic allocations that reproduces
// a target fractional allocation exactly.
struct Lottery {
  std::vector<LotteryPart> parts;

  RandomAllocation combination(int agents, int objects) const;
};

// Writes mu as a lottery by iterated vertex extraction: repeatedly pull out
// an integral allocation that agrees with mu on integral cells and keeps
// every column within the floor/ceiling of its current sum, then remove the
// largest multiple of it that keeps the remainder implementable. Each round
// fixes at least one cell or column at an integral value, so the part count
// is at most the number of fractional cells plus columns plus one.
// Decompositions are not canonical. Throws unless mu is implementable.
Lottery decompose(const Market& market, const RandomAllocation& mu);

// Fixed 64-bit mixing generator (splitmix64): one state step plus an
// avalanche mix, reproducible across platforms. sample() consumes exactly
// one output per draw.
uint64_t splitmix64(uint64_t state);

// Index of the part drawn for this seed: the first part whose cumulative
// weight exceeds splitmix64(seed) / 2^64.
std::size_t sample_index(const Lottery& lottery, uint64_t seed);

// Seed-deterministic draw: identical (lottery, seed) yields the identical
// part.
const DeterministicAllocation& sample(const Lottery& lottery, uint64_t seed);

}  // namespace mps
