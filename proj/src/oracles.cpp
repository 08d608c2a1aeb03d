#include "mps/oracles.hpp"

#include <algorithm>
#include <numeric>

#include "mps/circulation.hpp"
#include "mps/constraints.hpp"
#include "mps/eating.hpp"
#include "mps/errors.hpp"
#include "mps/fosd.hpp"
#include "mps/market.hpp"
#include "mps/simplex.hpp"

namespace mps {

namespace {

void enumerate_rec(const Market& market, int agent, DeterministicAllocation& partial,
                   std::vector<int>& columns, std::vector<DeterministicAllocation>& out) {
  const int n = market.num_agents();
  const int o = market.num_objects();
  if (agent == n) {
    for (int j = 0; j < o; ++j)
      if (columns[j] < market.objects[j].min) return;
    out.push_back(partial);
    return;
  }

  // Seats still owed to minimums must fit in the remaining agents; each
  // remaining agent can add at most one seat per object.
  const int remaining = n - agent - 1;
  std::vector<int> subset;
  const auto deficit_ok = [&]() {
    long owed = 0;
    for (int j = 0; j < o; ++j) {
      const int gap = market.objects[j].min - columns[j];
      if (gap > remaining) return false;
      if (gap > 0) owed += gap;
    }
    return owed <= static_cast<long>(remaining) * market.demand;
  };

  const auto choose = [&](auto&& self, int from, int picked) -> void {
    if (picked == market.demand) {
      if (deficit_ok()) enumerate_rec(market, agent + 1, partial, columns, out);
      return;
    }
    for (int j = from; j < o; ++j) {
      if (columns[j] >= market.objects[j].cap) continue;
      partial.set(agent, j, 1);
      ++columns[j];
      self(self, j + 1, picked + 1);
      partial.set(agent, j, 0);
      --columns[j];
    }
  };
  choose(choose, 0, 0);
}

Rat prefix_sum(const std::vector<Rat>& row, const std::vector<int>& order, int upto) {
  Rat total(0);
  for (int k = 0; k <= upto; ++k) total += row[order[k]];
  return total;
}

MpsResult run_engine(const Market& market) {
  return market.demand == 1 ? mps_unit(market) : mps_general(market);
}

// Residual single-pick feasibility: `remaining` unit-demand agents must be
// able to fill every outstanding minimum within the leftover capacities.
bool residual_completable(const Market& market, const std::vector<int>& columns, int remaining) {
  const int o = market.num_objects();
  CirculationNetwork net;
  net.num_nodes = 2 + o;
  const int source = 0, sink = 1;
  for (int j = 0; j < o; ++j) {
    const long lo = std::max(0, market.objects[j].min - columns[j]);
    const long hi = market.objects[j].cap - columns[j];
    net.arcs.push_back({source, 2 + j, Rat(lo), Rat(hi)});
    net.arcs.push_back({2 + j, sink, Rat(0), Rat(hi)});
  }
  net.arcs.push_back({sink, source, Rat(remaining), Rat(remaining)});
  return solve_circulation(net).has_value();
}

}  // namespace

std::vector<DeterministicAllocation> enumerate_allowable(const Market& market,
                                                         const EnumLimits& limits) {
  if (market.num_agents() > limits.max_agents || market.num_objects() > limits.max_objects)
    throw SizeCapError("enumerate_allowable: instance exceeds the configured cap");
  std::vector<DeterministicAllocation> out;
  DeterministicAllocation partial(market.num_agents(), market.num_objects());
  std::vector<int> columns(market.num_objects(), 0);
  enumerate_rec(market, 0, partial, columns, out);
  return out;
}

LpCertificate sd_efficient(const Market& market, const RandomAllocation& mu) {
  const DeltaDSystem system = delta_d_system(market);
  if (!system.contains(mu)) throw ValidationError("sd_efficient: allocation not implementable");

  const int n = market.num_agents();
  const int o = market.num_objects();
  const auto cell = [o](int i, int j) { return i * o + j; };
  const auto slack_var = [n, o](int i, int k) { return n * o + i * o + k; };

  LpProblem lp;
  lp.num_vars = 2 * n * o;
  lp.objective.assign(lp.num_vars, Rat(0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < o; ++k) lp.objective[slack_var(i, k)] = 1;

  const auto fresh_row = [&lp](RowSense sense, Rat rhs) -> LpRow& {
    lp.rows.push_back({std::vector<Rat>(lp.num_vars, Rat(0)), sense, std::move(rhs)});
    return lp.rows.back();
  };

  for (int i = 0; i < n; ++i) {
    LpRow& row = fresh_row(RowSense::Equal, Rat(market.demand));
    for (int j = 0; j < o; ++j) row.coeffs[cell(i, j)] = 1;
  }
  for (int j = 0; j < o; ++j) {
    LpRow& row = fresh_row(RowSense::LessEq, Rat(market.objects[j].cap));
    for (int i = 0; i < n; ++i) row.coeffs[cell(i, j)] = 1;
  }
  for (int j : market.minimum_objects()) {
    LpRow& row = fresh_row(RowSense::GreaterEq, Rat(market.objects[j].min));
    for (int i = 0; i < n; ++i) row.coeffs[cell(i, j)] = 1;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < o; ++j) fresh_row(RowSense::LessEq, Rat(1)).coeffs[cell(i, j)] = 1;

  for (int i = 0; i < n; ++i) {
    const std::vector<Rat> mu_row = mu.row(i);
    for (int k = 0; k < o; ++k) {
      LpRow& row = fresh_row(RowSense::GreaterEq, prefix_sum(mu_row, market.prefs[i], k));
      for (int r = 0; r <= k; ++r) row.coeffs[cell(i, market.prefs[i][r])] = 1;
      row.coeffs[slack_var(i, k)] = -1;
    }
  }

  const LpSolution solution = solve_lp(lp);
  if (solution.status != LpStatus::Optimal)
    throw InternalError("sd_efficient: improvement LP did not solve");

  LpCertificate certificate;
  if (solution.objective == 0) {
    certificate.status = LpCertificate::Status::OptimumZero;
    return certificate;
  }

  RandomAllocation improving(n, o);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < o; ++j) improving.at(i, j) = solution.x[cell(i, j)];

  // Self-check: the carried allocation must be implementable and weakly
  // dominate mu for everyone, strictly somewhere.
  if (!system.contains(improving))
    throw InternalError("sd_efficient: certificate not implementable");
  bool strict = false;
  for (int i = 0; i < n; ++i) {
    const FosdResult cmp = fosd_compare(market.prefs[i], improving.row(i), mu.row(i));
    if (cmp == FosdResult::StrictlyDominates)
      strict = true;
    else if (cmp != FosdResult::Equal)
      throw InternalError("sd_efficient: certificate does not dominate");
  }
  if (!strict) throw InternalError("sd_efficient: certificate not strict");

  certificate.status = LpCertificate::Status::ImprovementFound;
  certificate.improving = std::move(improving);
  return certificate;
}

AuditReport envy_free(const Market& market, const RandomAllocation& mu) {
  AuditReport report;
  for (int i = 0; i < market.num_agents(); ++i) {
    for (int other = 0; other < market.num_agents(); ++other) {
      if (other == i) continue;
      if (fosd_compare(market.prefs[i], mu.row(i), mu.row(other)) ==
          FosdResult::StrictlyDominated) {
        report.pass = false;
        report.envy = EnvyWitness{i, other};
        report.detail = "agent '" + market.agent_ids[i] + "' strictly prefers the lottery of '" +
                        market.agent_ids[other] + "'";
        return report;
      }
    }
  }
  return report;
}

AuditReport weak_sp_audit(const Market& market, const SpLimits& limits) {
  if (market.demand != 1) throw ValidationError("weak_sp_audit: demand must be 1");
  if (market.num_objects() > limits.max_objects)
    throw SizeCapError("weak_sp_audit: too many objects to enumerate misreports");

  AuditReport report;
  const RandomAllocation truth = mps_unit(market).allocation;

  std::vector<int> order(market.num_objects());
  std::iota(order.begin(), order.end(), 0);
  for (int i = 0; i < market.num_agents(); ++i) {
    std::vector<int> misreport = order;
    std::sort(misreport.begin(), misreport.end());
    do {
      if (misreport == market.prefs[i]) continue;
      Market lied = market;
      lied.prefs[i] = misreport;
      const RandomAllocation outcome = mps_unit(lied).allocation;
      if (fosd_compare(market.prefs[i], outcome.row(i), truth.row(i)) ==
          FosdResult::StrictlyDominates) {
        report.pass = false;
        report.misreport = MisreportWitness{i, misreport, truth.row(i), outcome.row(i)};
        report.detail = "agent '" + market.agent_ids[i] + "' gains by misreporting";
        return report;
      }
    } while (std::next_permutation(misreport.begin(), misreport.end()));
  }
  return report;
}

AuditReport anonymity_audit(const Market& market, const std::vector<int>& pi) {
  if (static_cast<int>(pi.size()) != market.num_agents())
    throw ValidationError("anonymity_audit: permutation size mismatch");

  const RandomAllocation base = run_engine(market).allocation;
  Market permuted = market;
  for (int i = 0; i < market.num_agents(); ++i) permuted.prefs[i] = market.prefs[pi[i]];
  const RandomAllocation shifted = run_engine(permuted).allocation;

  AuditReport report;
  for (int i = 0; i < market.num_agents(); ++i) {
    if (shifted.row(i) != base.row(pi[i])) {
      report.pass = false;
      report.permutation = pi;
      report.detail = "permuting agents did not permute the allocation";
      return report;
    }
  }
  return report;
}

RandomAllocation rsd(const Market& market, const RsdLimits& limits) {
  if (market.demand != 1) throw ValidationError("rsd: demand must be 1");
  if (market.num_agents() > limits.max_agents)
    throw SizeCapError("rsd: too many agents to enumerate priority orders");
  if (!validate_feasibility(market).feasible) throw InfeasibleError("rsd: market is infeasible");

  const int n = market.num_agents();
  const int o = market.num_objects();
  std::vector<std::vector<long>> counts(n, std::vector<long>(o, 0));

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  long factorial = 0;
  do {
    ++factorial;
    std::vector<int> columns(o, 0);
    for (int pos = 0; pos < n; ++pos) {
      const int agent = order[pos];
      bool picked = false;
      for (int j : market.prefs[agent]) {
        if (columns[j] >= market.objects[j].cap) continue;
        ++columns[j];
        if (residual_completable(market, columns, n - pos - 1)) {
          ++counts[agent][j];
          picked = true;
          break;
        }
        --columns[j];
      }
      if (!picked) throw InternalError("rsd: no feasible pick in a feasible market");
    }
  } while (std::next_permutation(order.begin(), order.end()));

  RandomAllocation result(n, o);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < o; ++j) result.at(i, j) = rat(counts[i][j], factorial);
  return result;
}

}  // namespace mps
