#pragma once

#include <string>

#include "json.hpp"
#include "mps/allocation.hpp"
#include "mps/constraints.hpp"
#include "mps/decompose.hpp"
#include "mps/eating.hpp"
#include "mps/market.hpp"
#include "mps/oracles.hpp"

namespace mps {

// All emitters use ordered JSON with fixed insertion order, so identical
// inputs serialize byte-identically. Rationals serialize as lowest-terms
// "p/q" strings ("0" and "1" stay plain).
using Json = nlohmann::ordered_json;

Json market_to_json(const Market& market);
Json allocation_to_json(const Market& market, const RandomAllocation& mu);
RandomAllocation allocation_from_json(const Market& market, const Json& doc);
Json assignment_to_json(const Market& market, const DeterministicAllocation& alloc);
Json system_to_json(const Market& market, const ConstraintSystem& system);
Json trace_to_json(const Market& market, const EatingTrace& trace);
Json lottery_to_json(const Market& market, const Lottery& lottery);
Json report_to_json(const Market& market, const std::string& property, const AuditReport& report);

}  // namespace mps
