#include <algorithm>
#include <stdexcept>
#include <vector>

#include "fairdiv/mechanisms.hpp"

namespace fairdiv {

std::size_t EnvyGraph::edge_count() const {
  std::size_t count = 0;
  for (const auto& row : envies) {
    count += static_cast<std::size_t>(std::count(row.begin(), row.end(), true));
  }
  return count;
}

bool EnvyGraph::is_envied(AgentIndex agent) const {
  return std::any_of(envies.begin(), envies.end(),
                     [agent](const auto& row) { return row[agent]; });
}

EnvyGraph build_envy_graph(const Instance& inst,
                           const std::vector<Bundle>& partial) {
  const std::size_t n = inst.n();
  EnvyGraph graph{std::vector<std::vector<bool>>(n, std::vector<bool>(n))};
  for (AgentIndex a = 0; a < n; ++a) {
    const Rational own = bundle_utility(inst, a, partial[a]);
    for (AgentIndex b = 0; b < n; ++b) {
      if (a != b && own < bundle_utility(inst, a, partial[b])) {
        graph.envies[a][b] = true;
      }
    }
  }
  return graph;
}

namespace {

std::optional<AgentIndex> first_unenvied(const EnvyGraph& graph,
                                         const AgentOrdering& ordering) {
  for (std::size_t pos = 0; pos < ordering.size(); ++pos) {
    const AgentIndex a = ordering.agent_at(pos);
    if (!graph.is_envied(a)) return a;
  }
  return std::nullopt;
}

// Every agent is envied, so every vertex has an in-edge: walk backwards from
// the first agent, always stepping to the smallest-position envier, until a
// vertex repeats. Returned so that cycle[i] envies cycle[i+1].
std::vector<AgentIndex> find_cycle(const EnvyGraph& graph,
                                   const AgentOrdering& ordering) {
  const std::size_t n = ordering.size();
  std::vector<std::size_t> seen_at(n, n);
  std::vector<AgentIndex> walk;
  AgentIndex cur = ordering.agent_at(0);
  while (seen_at[cur] == n) {
    seen_at[cur] = walk.size();
    walk.push_back(cur);
    std::optional<AgentIndex> envier;
    for (std::size_t pos = 0; pos < n; ++pos) {
      const AgentIndex b = ordering.agent_at(pos);
      if (graph.envies[b][cur]) {
        envier = b;
        break;
      }
    }
    if (!envier) {
      throw std::logic_error("envy graph: envied agent without an envier");
    }
    cur = *envier;
  }
  std::vector<AgentIndex> cycle(walk.begin() + static_cast<std::ptrdiff_t>(
                                                   seen_at[cur]),
                                walk.end());
  std::reverse(cycle.begin(), cycle.end());
  return cycle;
}

}  // namespace

EnvyCycleTrace envy_cycle_trace(const Instance& inst,
                                const AgentOrdering& ordering) {
  if (ordering.size() != inst.n()) {
    throw InputError("ordering size does not match the number of agents");
  }
  EnvyCycleTrace trace;
  std::vector<Bundle> bundles(inst.n());

  for (GoodIndex g = 0; g < inst.m(); ++g) {
    EnvyGraph graph = build_envy_graph(inst, bundles);
    const auto receiver = first_unenvied(graph, ordering);
    if (!receiver) {
      throw std::logic_error("envy-cycle: no unenvied agent before assignment");
    }
    bundles[*receiver].push_back(g);
    ++trace.graph_operations;

    graph = build_envy_graph(inst, bundles);
    while (!first_unenvied(graph, ordering)) {
      CycleResolution step;
      step.cycle = find_cycle(graph, ordering);
      step.edges_before = graph.edge_count();
      std::vector<Bundle> next = bundles;
      for (std::size_t i = 0; i < step.cycle.size(); ++i) {
        const AgentIndex taker = step.cycle[i];
        const AgentIndex giver = step.cycle[(i + 1) % step.cycle.size()];
        next[taker] = bundles[giver];
      }
      bundles = std::move(next);
      graph = build_envy_graph(inst, bundles);
      step.edges_after = graph.edge_count();
      trace.resolutions.push_back(std::move(step));
      ++trace.graph_operations;
    }
  }

  for (auto& bundle : bundles) bundle = make_bundle(std::move(bundle));
  trace.allocation.bundles = std::move(bundles);
  return trace;
}

Allocation envy_cycle(const Instance& inst, const AgentOrdering& ordering) {
  return envy_cycle_trace(inst, ordering).allocation;
}

}  // namespace fairdiv
