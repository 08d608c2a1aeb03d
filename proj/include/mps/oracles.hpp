#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mps/allocation.hpp"
#include "mps/rational.hpp"

namespace mps {

struct Market;

struct EnumLimits {
  int max_agents = 5;
  int max_objects = 5;
};

// Exhaustive list of every allowable deterministic allocation. Desk scale
// only; throws past the limits.
std::vector<DeterministicAllocation> enumerate_allowable(const Market& market,
                                                         const EnumLimits& limits = {});

struct LpCertificate {
  enum class Status { OptimumZero, ImprovementFound };
  Status status = Status::OptimumZero;
  // Implementable allocation every agent weakly prefix-dominates mu with,
  // strictly for at least one; present iff status is ImprovementFound and
  // re-validated before being returned.
  std::optional<RandomAllocation> improving;
};

// Exact LP test for stochastic-dominance efficiency: maximize total prefix
// slack of an implementable allocation over mu. A zero optimum certifies
// that no allocation weakly improves every agent.
LpCertificate sd_efficient(const Market& market, const RandomAllocation& mu);

struct EnvyWitness {
  int agent = -1;  // strictly prefers...
  int other = -1;  // ...this agent's row, under its own preferences
};

struct MisreportWitness {
  int agent = -1;
  std::vector<int> misreport;  // object indices, best first
  std::vector<Rat> truthful_row;
  std::vector<Rat> misreport_row;
};

struct AuditReport {
  bool pass = true;
  std::string detail;
  std::optional<EnvyWitness> envy;
  std::optional<MisreportWitness> misreport;
  std::optional<std::vector<int>> permutation;
};

// No agent's row is strictly prefix-dominated, for that agent, by another
// agent's row.
AuditReport envy_free(const Market& market, const RandomAllocation& mu);

struct SpLimits {
  int max_objects = 5;  // at most 120 misreports per agent
};

// Unit demand only: reruns the mechanism under every unilateral misreport
// and checks none strictly prefix-dominates the truthful outcome for the
// misreporter.
AuditReport weak_sp_audit(const Market& market, const SpLimits& limits = {});

// Runs the mechanism on the agent-permuted profile and checks the output is
// the equally permuted original: row pi[i] of the original equals row i of
// the permuted run.
AuditReport anonymity_audit(const Market& market, const std::vector<int>& pi);

struct RsdLimits {
  int max_agents = 7;  // priority orders are enumerated exactly
};

// Randomized serial dictatorship baseline, unit demand: average over all
// priority orders of the deterministic outcome where each agent takes their
// best object that still has a seat and keeps the rest of the market
// completable (checked by circulation on the residual instance).
RandomAllocation rsd(const Market& market, const RsdLimits& limits = {});

}  // namespace mps
