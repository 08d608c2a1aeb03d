#pragma once

#include <vector>

#include "mps/rational.hpp"

namespace mps {

enum class FosdResult { Equal, StrictlyDominates, StrictlyDominated, Incomparable };

// First-order stochastic dominance between two lottery rows, judged by one
// agent's strict preference order (object indices, best first): a dominates
// b when every prefix sum of a in that order is at least the matching prefix
// sum of b. Antisymmetric by construction. Throws on length mismatch.
FosdResult fosd_compare(const std::vector<int>& pref_order, const std::vector<Rat>& a,
                        const std::vector<Rat>& b);

}  // namespace mps
