#include <optional>
#include <string>
#include <vector>

#include "fairdiv/mechanisms.hpp"

namespace fairdiv {

NashObjective nash_objective(const Instance& inst, const Allocation& alloc) {
  NashObjective objective;
  objective.product = 1;
  for (AgentIndex a = 0; a < inst.n(); ++a) {
    const Rational u = bundle_utility(inst, a, alloc.bundles[a]);
    if (sgn(u) > 0) {
      ++objective.positive_agents;
      objective.product *= u;
    }
  }
  if (objective.positive_agents == 0) objective.product = 0;
  return objective;
}

Allocation mnw_bruteforce(const Instance& inst, const AgentOrdering& ordering,
                          std::uint64_t cap) {
  if (ordering.size() != inst.n()) {
    throw InputError("ordering size does not match the number of agents");
  }
  const std::size_t n = inst.n();
  const std::size_t m = inst.m();
  if (saturating_power(n, m, cap) > cap) {
    throw ResourceError("mnw_bruteforce: n^m = " + std::to_string(n) + "^" +
                        std::to_string(m) + " exceeds enumeration cap " +
                        std::to_string(cap));
  }

  // Depth-first over goods; each good tries agents in position order, so the
  // enumeration is lexicographic and the first maximizer wins ties.
  std::vector<Rational> totals(n, Rational(0));
  std::vector<std::size_t> owner(m, 0);
  std::optional<NashObjective> best;
  std::vector<std::size_t> best_owner(m, 0);

  auto visit = [&](auto&& self, GoodIndex g) -> void {
    if (g == m) {
      NashObjective objective;
      objective.product = 1;
      for (const auto& u : totals) {
        if (sgn(u) > 0) {
          ++objective.positive_agents;
          objective.product *= u;
        }
      }
      if (objective.positive_agents == 0) objective.product = 0;
      if (!best || objective > *best) {
        best = std::move(objective);
        best_owner = owner;
      }
      return;
    }
    for (std::size_t pos = 0; pos < n; ++pos) {
      const AgentIndex a = ordering.agent_at(pos);
      owner[g] = a;
      totals[a] += inst.utility(a, g);
      self(self, g + 1);
      totals[a] -= inst.utility(a, g);
    }
  };
  visit(visit, 0);

  Allocation alloc{std::vector<Bundle>(n)};
  for (GoodIndex g = 0; g < m; ++g) alloc.bundles[best_owner[g]].push_back(g);
  return alloc;
}

}  // namespace fairdiv
