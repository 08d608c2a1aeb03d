#pragma once

#include <cstdint>
#include <vector>

#include "mps/rational.hpp"

namespace mps {

struct Market;

// 0/1 assignment matrix, one row per agent, one column per object.
class DeterministicAllocation {
 public:
  DeterministicAllocation() = default;
  DeterministicAllocation(int agents, int objects)
      : agents_(agents), objects_(objects), cells_(static_cast<std::size_t>(agents) * objects, 0) {}

  int at(int agent, int object) const { return cells_[static_cast<std::size_t>(agent) * objects_ + object]; }
  void set(int agent, int object, int value) {
    cells_[static_cast<std::size_t>(agent) * objects_ + object] = static_cast<int8_t>(value);
  }

  int agents() const { return agents_; }
  int objects() const { return objects_; }

  int row_sum(int agent) const;
  int column_sum(int object) const;

  bool operator==(const DeterministicAllocation&) const = default;

 private:
  int agents_ = 0;
  int objects_ = 0;
  std::vector<int8_t> cells_;
};

// Fractional assignment matrix of exact rationals; row i is agent i's
// lottery over objects.
class RandomAllocation {
 public:
  RandomAllocation() = default;
  RandomAllocation(int agents, int objects)
      : agents_(agents), objects_(objects), cells_(static_cast<std::size_t>(agents) * objects, Rat(0)) {}

  static RandomAllocation from(const DeterministicAllocation& alloc);

  const Rat& at(int agent, int object) const {
    return cells_[static_cast<std::size_t>(agent) * objects_ + object];
  }
  Rat& at(int agent, int object) { return cells_[static_cast<std::size_t>(agent) * objects_ + object]; }

  int agents() const { return agents_; }
  int objects() const { return objects_; }

  Rat row_sum(int agent) const;
  Rat column_sum(int object) const;
  std::vector<Rat> row(int agent) const;

  bool all_in_unit_interval() const;
  bool integral() const;

  bool operator==(const RandomAllocation&) const = default;

 private:
  int agents_ = 0;
  int objects_ = 0;
  std::vector<Rat> cells_;
};

// Demand, minimum and capacity conditions for a deterministic allocation.
bool is_allowable(const Market& market, const DeterministicAllocation& alloc);

}  // namespace mps
