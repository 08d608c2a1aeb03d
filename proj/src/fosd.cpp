#include "mps/fosd.hpp"

#include "mps/errors.hpp"

namespace mps {

FosdResult fosd_compare(const std::vector<int>& pref_order, const std::vector<Rat>& a,
                        const std::vector<Rat>& b) {
  if (a.size() != b.size() || a.size() != pref_order.size())
    throw ValidationError("fosd_compare: length mismatch");

  bool a_never_below = true;  // every prefix sum of a >= that of b
  bool b_never_below = true;
  Rat sum_a(0), sum_b(0);
  for (int j : pref_order) {
    sum_a += a[j];
    sum_b += b[j];
    if (sum_a < sum_b) a_never_below = false;
    if (sum_b < sum_a) b_never_below = false;
  }
  if (a_never_below && b_never_below) return FosdResult::Equal;
  if (a_never_below) return FosdResult::StrictlyDominates;
  if (b_never_below) return FosdResult::StrictlyDominated;
  return FosdResult::Incomparable;
}

}  // namespace mps
