#include "mps/circulation.hpp"

#include <limits>
#include <queue>

#include "mps/errors.hpp"
#include "mps/market.hpp"

namespace mps {

namespace {

// Residual edge-list max-flow (breadth-first augmentation). Exact rational
// capacities; the number of augmentations is bounded by V*E independent of
// capacity values, and integral capacities give integral flows.
class MaxFlow {
 public:
  explicit MaxFlow(int nodes) : head_(nodes) {}

  int add_edge(int from, int to, Rat cap) {
    const int id = static_cast<int>(edges_.size());
    edges_.push_back({to, std::move(cap)});
    head_[from].push_back(id);
    edges_.push_back({from, Rat(0)});
    head_[to].push_back(id + 1);
    return id;
  }

  Rat run(int source, int sink) {
    Rat total(0);
    while (true) {
      std::vector<int> parent_edge(head_.size(), -1);
      std::queue<int> queue;
      queue.push(source);
      parent_edge[source] = -2;
      while (!queue.empty() && parent_edge[sink] == -1) {
        const int v = queue.front();
        queue.pop();
        for (int id : head_[v]) {
          const Edge& e = edges_[id];
          if (e.cap > 0 && parent_edge[e.to] == -1) {
            parent_edge[e.to] = id;
            queue.push(e.to);
          }
        }
      }
      if (parent_edge[sink] == -1) break;

      Rat bottleneck;
      bool first = true;
      for (int v = sink; v != source;) {
        const Edge& e = edges_[parent_edge[v]];
        if (first || e.cap < bottleneck) bottleneck = e.cap;
        first = false;
        v = edges_[parent_edge[v] ^ 1].to;
      }
      for (int v = sink; v != source;) {
        const int id = parent_edge[v];
        edges_[id].cap -= bottleneck;
        edges_[id ^ 1].cap += bottleneck;
        v = edges_[id ^ 1].to;
      }
      total += bottleneck;
    }
    return total;
  }

  // Flow pushed through a forward edge returned by add_edge.
  Rat flow_on(int edge_id) const { return edges_[edge_id ^ 1].cap; }

 private:
  struct Edge {
    int to;
    Rat cap;  // residual capacity
  };
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> head_;
};

}  // namespace

bool Circulation::integral() const {
  for (const Rat& f : flow)
    if (!is_integral(f)) return false;
  return true;
}

std::optional<Circulation> solve_circulation(const CirculationNetwork& net) {
  for (const Arc& arc : net.arcs)
    if (arc.lower > arc.upper) return std::nullopt;

  // Saturate lower bounds and balance the resulting node excesses through a
  // super source/sink pair.
  const int super_source = net.num_nodes;
  const int super_sink = net.num_nodes + 1;
  MaxFlow flow(net.num_nodes + 2);

  std::vector<Rat> excess(net.num_nodes, Rat(0));
  std::vector<int> arc_edge(net.arcs.size(), -1);
  for (std::size_t a = 0; a < net.arcs.size(); ++a) {
    const Arc& arc = net.arcs[a];
    arc_edge[a] = flow.add_edge(arc.from, arc.to, arc.upper - arc.lower);
    excess[arc.to] += arc.lower;
    excess[arc.from] -= arc.lower;
  }

  Rat required(0);
  for (int v = 0; v < net.num_nodes; ++v) {
    if (excess[v] > 0) {
      flow.add_edge(super_source, v, excess[v]);
      required += excess[v];
    } else if (excess[v] < 0) {
      flow.add_edge(v, super_sink, -excess[v]);
    }
  }

  if (flow.run(super_source, super_sink) != required) return std::nullopt;

  Circulation result;
  result.flow.reserve(net.arcs.size());
  for (std::size_t a = 0; a < net.arcs.size(); ++a)
    result.flow.push_back(net.arcs[a].lower + flow.flow_on(arc_edge[a]));
  return result;
}

CirculationNetwork completion_network(const Market& market, const RandomAllocation& nu) {
  const int n = market.num_agents();
  const int o = market.num_objects();
  if (nu.agents() != n || nu.objects() != o)
    throw ValidationError("completion_network: allocation shape mismatch");

  CirculationNetwork net;
  net.num_nodes = 2 + n + o;
  const int source = 0, sink = 1;
  const auto agent_node = [](int i) { return 2 + i; };
  const auto object_node = [n](int j) { return 2 + n + j; };

  const Rat demand(market.demand);
  for (int i = 0; i < n; ++i) net.arcs.push_back({source, agent_node(i), demand, demand});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < o; ++j)
      net.arcs.push_back({agent_node(i), object_node(j), nu.at(i, j), Rat(1)});
  for (int j = 0; j < o; ++j)
    net.arcs.push_back(
        {object_node(j), sink, Rat(market.objects[j].min), Rat(market.objects[j].cap)});
  const Rat total = demand * n;
  net.arcs.push_back({sink, source, total, total});
  return net;
}

bool lcs_member(const Market& market, const RandomAllocation& nu) {
  if (!nu.all_in_unit_interval()) return false;
  return solve_circulation(completion_network(market, nu)).has_value();
}

FeasibilityReport validate_feasibility(const Market& market) {
  FeasibilityReport report;
  long cap_sum = 0, min_sum = 0;
  for (const auto& spec : market.objects) {
    cap_sum += spec.cap;
    min_sum += spec.min;
  }
  report.cap_sum_ok = cap_sum >= static_cast<long>(market.num_agents()) * market.demand;
  report.min_sum_ok = min_sum <= market.num_agents();
  report.feasible =
      lcs_member(market, RandomAllocation(market.num_agents(), market.num_objects()));
  return report;
}

}  // namespace mps
