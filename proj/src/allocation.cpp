#include "mps/allocation.hpp"

#include "mps/market.hpp"

namespace mps {

int DeterministicAllocation::row_sum(int agent) const {
  int total = 0;
  for (int j = 0; j < objects_; ++j) total += at(agent, j);
  return total;
}

int DeterministicAllocation::column_sum(int object) const {
  int total = 0;
  for (int i = 0; i < agents_; ++i) total += at(i, object);
  return total;
}

RandomAllocation RandomAllocation::from(const DeterministicAllocation& alloc) {
  RandomAllocation out(alloc.agents(), alloc.objects());
  for (int i = 0; i < alloc.agents(); ++i)
    for (int j = 0; j < alloc.objects(); ++j) out.at(i, j) = alloc.at(i, j);
  return out;
}

Rat RandomAllocation::row_sum(int agent) const {
  Rat total(0);
  for (int j = 0; j < objects_; ++j) total += at(agent, j);
  return total;
}

Rat RandomAllocation::column_sum(int object) const {
  Rat total(0);
  for (int i = 0; i < agents_; ++i) total += at(i, object);
  return total;
}

std::vector<Rat> RandomAllocation::row(int agent) const {
  std::vector<Rat> out;
  out.reserve(objects_);
  for (int j = 0; j < objects_; ++j) out.push_back(at(agent, j));
  return out;
}

bool RandomAllocation::all_in_unit_interval() const {
  for (const Rat& v : cells_)
    if (v < 0 || v > 1) return false;
  return true;
}

bool RandomAllocation::integral() const {
  for (const Rat& v : cells_)
    if (!is_integral(v)) return false;
  return true;
}

bool is_allowable(const Market& market, const DeterministicAllocation& alloc) {
  if (alloc.agents() != market.num_agents() || alloc.objects() != market.num_objects()) return false;
  for (int i = 0; i < alloc.agents(); ++i)
    if (alloc.row_sum(i) != market.demand) return false;
  for (int j = 0; j < alloc.objects(); ++j) {
    const int total = alloc.column_sum(j);
    if (total < market.objects[j].min || total > market.objects[j].cap) return false;
  }
  return true;
}

}  // namespace mps
