#include <vector>

#include "fairdiv/mechanisms.hpp"

namespace fairdiv {

Allocation round_robin(const Instance& inst, const AgentOrdering& ordering) {
  if (ordering.size() != inst.n()) {
    throw InputError("ordering size does not match the number of agents");
  }
  Allocation alloc{std::vector<Bundle>(inst.n())};
  std::vector<bool> taken(inst.m(), false);
  std::size_t remaining = inst.m();
  while (remaining > 0) {
    for (std::size_t pos = 0; pos < inst.n() && remaining > 0; ++pos) {
      const AgentIndex a = ordering.agent_at(pos);
      std::size_t best = inst.m();
      for (GoodIndex g = 0; g < inst.m(); ++g) {
        if (taken[g]) continue;
        // Strict comparison keeps the smallest index among equal values.
        if (best == inst.m() || inst.utility(a, g) > inst.utility(a, best)) {
          best = g;
        }
      }
      taken[best] = true;
      alloc.bundles[a].push_back(best);
      --remaining;
    }
  }
  for (auto& bundle : alloc.bundles) bundle = make_bundle(std::move(bundle));
  return alloc;
}

}  // namespace fairdiv
