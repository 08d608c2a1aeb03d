#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace mps {

struct ObjectSpec {
  std::string id;
  int min = 0;  // minimum required assignees, >= 0
  int cap = 1;  // capacity, >= 1; normalized to at most the agent count
};

// An assignment market: agents with strict complete preferences over
// objects, each demanding `demand` distinct objects. Agent and object order
// in the input is the canonical index order for every matrix in the library.
struct Market {
  int demand = 1;
  std::vector<std::string> agent_ids;
  std::vector<ObjectSpec> objects;
  std::vector<std::vector<int>> prefs;  // prefs[i]: object indices, best first
  std::vector<std::string> warnings;    // normalization notes (capacity clamping)

  int num_agents() const { return static_cast<int>(agent_ids.size()); }
  int num_objects() const { return static_cast<int>(objects.size()); }

  // Indices of objects with a positive minimum.
  std::vector<int> minimum_objects() const;

  // ranks[i][j] = position of object j in agent i's list (0 = best).
  std::vector<std::vector<int>> preference_ranks() const;

  int object_index(std::string_view id) const;  // -1 if unknown
  int agent_index(std::string_view id) const;   // -1 if unknown
};

// Parses the JSON market format:
//   {"d": int,
//    "objects": [{"id": str, "min": int, "cap": int}, ...],
//    "agents":  [{"id": str, "prefs": [str, ...]}, ...]}
// Throws ParseError on malformed text and ValidationError on invariant
// violations (incomplete or non-strict preference lists, min > cap, demand
// out of range). Capacities above the agent count are clamped with a
// warning recorded on the returned market.
Market parse_market(std::string_view text);

// Re-checks every Market invariant and applies capacity clamping. Used by
// parse_market; available separately for programmatically built markets.
void validate_market(Market& market);

struct FeasibilityReport {
  bool feasible = false;    // circulation verdict; authoritative
  bool cap_sum_ok = false;  // sum of capacities >= demand * agent count
  bool min_sum_ok = false;  // sum of minimums <= agent count (informational)
};

// Decides whether any allowable deterministic allocation exists. The verdict
// comes from a feasible-circulation check; the two scalar inequalities are
// reported alongside it but do not decide.
FeasibilityReport validate_feasibility(const Market& market);

}  // namespace mps
