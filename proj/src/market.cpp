#include "mps/market.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"
#include "mps/errors.hpp"

namespace mps {

std::vector<int> Market::minimum_objects() const {
  std::vector<int> out;
  for (int j = 0; j < num_objects(); ++j)
    if (objects[j].min > 0) out.push_back(j);
  return out;
}

std::vector<std::vector<int>> Market::preference_ranks() const {
  std::vector<std::vector<int>> ranks(num_agents(), std::vector<int>(num_objects(), -1));
  for (int i = 0; i < num_agents(); ++i)
    for (int r = 0; r < num_objects(); ++r) ranks[i][prefs[i][r]] = r;
  return ranks;
}

int Market::object_index(std::string_view id) const {
  for (int j = 0; j < num_objects(); ++j)
    if (objects[j].id == id) return j;
  return -1;
}

int Market::agent_index(std::string_view id) const {
  for (int i = 0; i < num_agents(); ++i)
    if (agent_ids[i] == id) return i;
  return -1;
}

void validate_market(Market& market) {
  const int n = market.num_agents();
  const int o = market.num_objects();
  if (n == 0) throw ValidationError("market has no agents");
  if (o == 0) throw ValidationError("market has no objects");
  if (market.demand < 1 || market.demand > o)
    throw ValidationError("demand " + std::to_string(market.demand) + " out of range [1, " +
                          std::to_string(o) + "]");

  std::set<std::string> seen_objects;
  for (auto& spec : market.objects) {
    if (!seen_objects.insert(spec.id).second)
      throw ValidationError("duplicate object id '" + spec.id + "'");
    if (spec.cap < 1) throw ValidationError("object '" + spec.id + "': capacity must be positive");
    if (spec.min < 0) throw ValidationError("object '" + spec.id + "': negative minimum");
    if (spec.cap > n) {
      market.warnings.push_back("object '" + spec.id + "': capacity " + std::to_string(spec.cap) +
                                " exceeds agent count " + std::to_string(n) + "; clamped");
      spec.cap = n;
    }
    if (spec.min > spec.cap)
      throw ValidationError("object '" + spec.id + "': minimum " + std::to_string(spec.min) +
                            " exceeds capacity " + std::to_string(spec.cap));
  }

  std::set<std::string> seen_agents;
  for (auto& id : market.agent_ids)
    if (!seen_agents.insert(id).second) throw ValidationError("duplicate agent id '" + id + "'");

  if (static_cast<int>(market.prefs.size()) != n)
    throw ValidationError("preference profile does not cover every agent");
  for (int i = 0; i < n; ++i) {
    std::vector<char> hit(o, 0);
    for (int j : market.prefs[i]) {
      if (j < 0 || j >= o)
        throw ValidationError("agent '" + market.agent_ids[i] + "': unknown object in preference list");
      if (hit[j])
        throw ValidationError("agent '" + market.agent_ids[i] + "': duplicate object '" +
                              market.objects[j].id + "' in preference list");
      hit[j] = 1;
    }
    if (static_cast<int>(market.prefs[i].size()) != o)
      throw ValidationError("agent '" + market.agent_ids[i] + "': incomplete preference list");
  }
}

Market parse_market(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("market file: ") + e.what());
  }

  Market market;
  try {
    market.demand = doc.at("d").get<int>();
    for (const auto& node : doc.at("objects")) {
      ObjectSpec spec;
      spec.id = node.at("id").get<std::string>();
      spec.min = node.at("min").get<int>();
      spec.cap = node.at("cap").get<int>();
      market.objects.push_back(std::move(spec));
    }
    for (const auto& node : doc.at("agents")) {
      market.agent_ids.push_back(node.at("id").get<std::string>());
      std::vector<int> order;
      for (const auto& ref : node.at("prefs")) {
        const auto id = ref.get<std::string>();
        const int j = market.object_index(id);
        if (j < 0)
          throw ValidationError("agent '" + market.agent_ids.back() + "': unknown object '" + id +
                                "' in preference list");
        order.push_back(j);
      }
      market.prefs.push_back(std::move(order));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("market file: ") + e.what());
  }

  validate_market(market);
  return market;
}

}  // namespace mps
