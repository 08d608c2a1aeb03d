#include "mps/constraints.hpp"

#include <algorithm>

#include "mps/errors.hpp"
#include "mps/market.hpp"

namespace mps {

namespace {

std::string object_set_label(const Market& market, const std::vector<int>& objects) {
  std::string out = "{";
  for (std::size_t k = 0; k < objects.size(); ++k) {
    if (k) out += ",";
    out += market.objects[objects[k]].id;
  }
  return out + "}";
}

std::string agent_set_label(const Market& market, const std::vector<int>& agents) {
  std::string out = "{";
  for (std::size_t k = 0; k < agents.size(); ++k) {
    if (k) out += ",";
    out += market.agent_ids[agents[k]];
  }
  return out + "}";
}

std::vector<int> bits_to_indices(unsigned mask, int size) {
  std::vector<int> out;
  for (int k = 0; k < size; ++k)
    if (mask & (1u << k)) out.push_back(k);
  return out;
}

}  // namespace

Rat Constraint::lhs(const RandomAllocation& mu) const {
  Rat total(0);
  for (const Term& term : terms) total += term.coeff * mu.at(term.agent, term.object);
  return total;
}

bool ConstraintSystem::holds(const RandomAllocation& mu) const {
  return first_violated(mu) == nullptr;
}

const Constraint* ConstraintSystem::first_violated(const RandomAllocation& mu) const {
  for (const Constraint& row : rows)
    if (!row.holds(mu)) return &row;
  return nullptr;
}

const Constraint* ConstraintSystem::find(std::string_view label) const {
  for (const Constraint& row : rows)
    if (row.label == label) return &row;
  return nullptr;
}

bool DeltaDSystem::contains(const RandomAllocation& mu) const {
  if (!mu.all_in_unit_interval()) return false;
  for (const Constraint& eq : row_sums)
    if (eq.lhs(mu) != eq.bound) return false;
  if (!caps.holds(mu)) return false;
  for (const Constraint& low : minimums)
    if (low.lhs(mu) < low.bound) return false;
  return true;
}

DeltaDSystem delta_d_system(const Market& market) {
  const int n = market.num_agents();
  const int o = market.num_objects();
  DeltaDSystem system;

  for (int i = 0; i < n; ++i) {
    Constraint row;
    row.label = "row-sum " + market.agent_ids[i];
    for (int j = 0; j < o; ++j) row.terms.push_back({i, j, Rat(1)});
    row.bound = market.demand;
    system.row_sums.push_back(std::move(row));
  }
  for (int j = 0; j < o; ++j) {
    Constraint row;
    row.label = "cap " + market.objects[j].id;
    for (int i = 0; i < n; ++i) row.terms.push_back({i, j, Rat(1)});
    row.bound = market.objects[j].cap;
    system.caps.rows.push_back(std::move(row));
  }
  for (int j : market.minimum_objects()) {
    Constraint row;
    row.label = "min " + market.objects[j].id;
    for (int i = 0; i < n; ++i) row.terms.push_back({i, j, Rat(1)});
    row.bound = market.objects[j].min;
    system.minimums.push_back(std::move(row));
  }
  return system;
}

ConstraintSystem lcs_system_unit(const Market& market) {
  if (market.demand != 1) throw ValidationError("lcs_system_unit: demand must be 1");
  if (!validate_feasibility(market).feasible)
    throw InfeasibleError("lcs_system_unit: market is infeasible");
  const int n = market.num_agents();
  const int o = market.num_objects();
  const std::vector<int> min_objects = market.minimum_objects();

  ConstraintSystem system;
  for (int i = 0; i < n; ++i) {
    Constraint row;
    row.label = "demand " + market.agent_ids[i];
    for (int j = 0; j < o; ++j) row.terms.push_back({i, j, Rat(1)});
    row.bound = 1;
    system.rows.push_back(std::move(row));
  }
  for (int j = 0; j < o; ++j) {
    Constraint row;
    row.label = "cap " + market.objects[j].id;
    for (int i = 0; i < n; ++i) row.terms.push_back({i, j, Rat(1)});
    row.bound = market.objects[j].cap;
    system.rows.push_back(std::move(row));
  }

  if (min_objects.size() > 20)
    throw SizeCapError("lcs_system_unit: too many minimum objects to enumerate");
  for (unsigned mask = 0; mask < (1u << min_objects.size()); ++mask) {
    const std::vector<int> chosen = bits_to_indices(mask, static_cast<int>(min_objects.size()));
    std::vector<char> in_set(o, 0);
    long reserved = 0;
    std::vector<int> set_ids;
    for (int k : chosen) {
      in_set[min_objects[k]] = 1;
      reserved += market.objects[min_objects[k]].min;
      set_ids.push_back(min_objects[k]);
    }
    Constraint row;
    row.label = "reserve " + object_set_label(market, set_ids);
    for (int j = 0; j < o; ++j) {
      if (in_set[j]) continue;
      for (int i = 0; i < n; ++i) row.terms.push_back({i, j, Rat(1)});
    }
    row.bound = Rat(n - reserved);
    if (row.bound < 0)
      throw InfeasibleError("lcs_system_unit: minimums over " + object_set_label(market, set_ids) +
                            " exceed the agent count");
    system.rows.push_back(std::move(row));
  }
  return system;
}

MinCondition min_reserve_condition(const Market& market, const RandomAllocation& mu) {
  MinCondition result;
  Rat total(0);
  for (int j = 0; j < market.num_objects(); ++j) {
    const Rat column = mu.column_sum(j);
    const Rat floor(market.objects[j].min);
    total += std::max(column, floor);
  }
  result.slack = Rat(market.num_agents()) - total;
  result.holds = result.slack >= 0;
  result.binds = result.slack == 0;
  return result;
}

ConstraintSystem lcs_system_general(const Market& market, const LcsOptions& options) {
  const int n = market.num_agents();
  const int o = market.num_objects();
  if (n > options.max_agents || o > options.max_objects)
    throw SizeCapError("lcs_system_general: instance exceeds the configured size cap");

  const std::vector<int> min_objects = market.minimum_objects();
  ConstraintSystem system;

  const auto maybe_push = [&](Constraint&& row) {
    if (row.bound < 0)
      throw InfeasibleError("lcs_system_general: negative bound on '" + row.label +
                            "' (market infeasible)");
    if (options.prune &&
        (row.terms.empty() || row.bound >= Rat(static_cast<long>(row.terms.size()))))
      return;  // cannot bind strictly inside the unit box
    system.rows.push_back(std::move(row));
  };

  for (unsigned obj_mask = 0; obj_mask < (1u << o); ++obj_mask) {
    const std::vector<int> object_set = bits_to_indices(obj_mask, o);
    long cap_sum = 0;
    for (int j : object_set) cap_sum += market.objects[j].cap;
    const int outside = o - static_cast<int>(object_set.size());

    for (unsigned agent_mask = 0; agent_mask < (1u << n); ++agent_mask) {
      const std::vector<int> agent_set = bits_to_indices(agent_mask, n);
      const long team = static_cast<long>(agent_set.size());

      Constraint row;
      row.label = "cap-cut S=" + object_set_label(market, object_set) +
                  " T=" + agent_set_label(market, agent_set);
      for (int i = 0; i < n; ++i) {
        if (agent_mask & (1u << i)) continue;
        for (int j : object_set) row.terms.push_back({i, j, Rat(1)});
      }
      row.bound = Rat(team * (outside - market.demand) + cap_sum);
      maybe_push(std::move(row));
    }
  }

  // Minimum cuts range only over subsets of minimum objects; others add
  // nothing to the reserved mass.
  for (unsigned min_mask = 0; min_mask < (1u << min_objects.size()); ++min_mask) {
    const std::vector<int> chosen = bits_to_indices(min_mask, static_cast<int>(min_objects.size()));
    std::vector<char> in_set(o, 0);
    long reserved = 0;
    std::vector<int> set_ids;
    for (int k : chosen) {
      in_set[min_objects[k]] = 1;
      reserved += market.objects[min_objects[k]].min;
      set_ids.push_back(min_objects[k]);
    }

    for (unsigned agent_mask = 0; agent_mask < (1u << n); ++agent_mask) {
      const std::vector<int> agent_set = bits_to_indices(agent_mask, n);
      const long team = static_cast<long>(agent_set.size());

      Constraint row;
      row.label = "min-cut S=" + object_set_label(market, set_ids) +
                  " T=" + agent_set_label(market, agent_set);
      for (int i : agent_set)
        for (int j = 0; j < o; ++j)
          if (!in_set[j]) row.terms.push_back({i, j, Rat(1)});
      row.bound = Rat(team * market.demand + (n - team) * static_cast<long>(set_ids.size()) -
                      reserved);
      maybe_push(std::move(row));
    }
  }

  return system;
}

}  // namespace mps
