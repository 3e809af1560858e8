#include "fairdiv/audit.hpp"

#include <algorithm>
#include <string>

namespace fairdiv {

std::optional<EnvyWitness> check_envy_free(const Instance& inst,
                                           const Allocation& alloc) {
  for (AgentIndex a = 0; a < inst.n(); ++a) {
    const Rational own = bundle_utility(inst, a, alloc.bundles[a]);
    for (AgentIndex b = 0; b < inst.n(); ++b) {
      if (a == b) continue;
      if (own < bundle_utility(inst, a, alloc.bundles[b])) {
        return EnvyWitness{a, b};
      }
    }
  }
  return std::nullopt;
}

std::optional<EnvyWitness> check_ef1(const Instance& inst,
                                     const Allocation& alloc) {
  for (AgentIndex a = 0; a < inst.n(); ++a) {
    const Rational own = bundle_utility(inst, a, alloc.bundles[a]);
    for (AgentIndex b = 0; b < inst.n(); ++b) {
      if (a == b) continue;
      const Bundle& theirs = alloc.bundles[b];
      const Rational value = bundle_utility(inst, a, theirs);
      if (own >= value) continue;
      Rational best = 0;
      for (GoodIndex g : theirs) best = std::max(best, inst.utility(a, g));
      if (own < value - best) return EnvyWitness{a, b};
    }
  }
  return std::nullopt;
}

std::optional<Allocation> check_po_bruteforce(const Instance& inst,
                                              const Allocation& alloc,
                                              std::uint64_t cap) {
  const std::size_t n = inst.n();
  const std::size_t m = inst.m();
  if (saturating_power(n, m, cap) > cap) {
    throw ResourceError("Pareto check: n^m = " + std::to_string(n) + "^" +
                        std::to_string(m) + " exceeds enumeration cap " +
                        std::to_string(cap));
  }
  std::vector<Rational> target(n);
  for (AgentIndex a = 0; a < n; ++a) {
    target[a] = bundle_utility(inst, a, alloc.bundles[a]);
  }

  std::vector<Rational> totals(n, Rational(0));
  std::vector<AgentIndex> owner(m, 0);
  std::optional<std::vector<AgentIndex>> found;

  auto visit = [&](auto&& self, GoodIndex g) -> void {
    if (found) return;
    if (g == m) {
      bool strict = false;
      for (AgentIndex a = 0; a < n; ++a) {
        if (totals[a] < target[a]) return;
        if (totals[a] > target[a]) strict = true;
      }
      if (strict) found = owner;
      return;
    }
    for (AgentIndex a = 0; a < n && !found; ++a) {
      owner[g] = a;
      totals[a] += inst.utility(a, g);
      self(self, g + 1);
      totals[a] -= inst.utility(a, g);
    }
  };
  visit(visit, 0);

  if (!found) return std::nullopt;
  Allocation witness{std::vector<Bundle>(n)};
  for (GoodIndex g = 0; g < m; ++g) witness.bundles[(*found)[g]].push_back(g);
  return witness;
}

Rational nash_welfare(const Instance& inst, const Allocation& alloc) {
  Rational product = 1;
  for (AgentIndex a = 0; a < inst.n(); ++a) {
    product *= bundle_utility(inst, a, alloc.bundles[a]);
  }
  return product;
}

Removal min_removal_k(const Instance& inst, AgentIndex evaluator,
                      const Rational& own_value, const Bundle& other) {
  std::vector<GoodIndex> by_value(other.begin(), other.end());
  std::stable_sort(by_value.begin(), by_value.end(),
                   [&](GoodIndex x, GoodIndex y) {
                     if (inst.utility(evaluator, x) != inst.utility(evaluator, y)) {
                       return inst.utility(evaluator, x) > inst.utility(evaluator, y);
                     }
                     return x < y;
                   });
  Rational remaining = bundle_utility(inst, evaluator, other);
  Removal removal;
  for (GoodIndex g : by_value) {
    if (remaining <= own_value) break;
    remaining -= inst.utility(evaluator, g);
    removal.goods.push_back(g);
  }
  removal.count = removal.goods.size();
  removal.goods = make_bundle(std::move(removal.goods));
  return removal;
}

std::vector<OrderedOutcome> run_all_orderings(MechanismId id,
                                              const Instance& inst,
                                              std::uint64_t cap) {
  if (saturating_factorial(inst.n(), cap) > cap) {
    throw ResourceError("n! orderings for n = " + std::to_string(inst.n()) +
                        " exceed ordering cap " + std::to_string(cap));
  }
  std::vector<OrderedOutcome> outcomes;
  for (auto& ordering : all_orderings(inst.n())) {
    Allocation alloc = run_mechanism(id, inst, ordering);
    outcomes.push_back({std::move(ordering), std::move(alloc)});
  }
  return outcomes;
}

PefDegree pef_degree_of(const Instance& inst,
                        const std::vector<OrderedOutcome>& outcomes) {
  PefDegree result;
  for (AgentIndex a = 0; a < inst.n(); ++a) {
    // min_removal_k only grows as own_value shrinks, so pairing every other
    // ordering with the agent's worst ordering attains the maximum.
    std::size_t worst = 0;
    Rational worst_value;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      Rational value = bundle_utility(inst, a, outcomes[i].allocation.bundles[a]);
      if (i == 0 || value < worst_value) {
        worst = i;
        worst_value = std::move(value);
      }
    }
    for (const auto& other : outcomes) {
      Removal removal = min_removal_k(inst, a, worst_value,
                                      other.allocation.bundles[a]);
      if (removal.count > result.degree) {
        result.degree = removal.count;
        result.witness = PefWitness{a, outcomes[worst].ordering, other.ordering,
                                    removal.count, std::move(removal.goods)};
      }
    }
  }
  return result;
}

PefDegree pef_degree(MechanismId id, const Instance& inst, std::uint64_t cap) {
  return pef_degree_of(inst, run_all_orderings(id, inst, cap));
}

std::optional<ScaleWitness> check_scale_invariance(
    MechanismId id, const Instance& inst, const std::vector<Rational>& scalars,
    const AgentOrdering& ordering) {
  const Instance scaled_inst = scale_profile(inst, scalars);
  Allocation unscaled = run_mechanism(id, inst, ordering);
  Allocation scaled = run_mechanism(id, scaled_inst, ordering);
  if (unscaled == scaled) return std::nullopt;
  return ScaleWitness{std::move(unscaled), std::move(scaled)};
}

}  // namespace fairdiv
