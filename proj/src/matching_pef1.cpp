#include <algorithm>
#include <vector>

#include "fairdiv/mechanisms.hpp"

namespace fairdiv {
namespace {

Integer power_of_two(std::size_t exponent) {
  Integer result;
  mpz_ui_pow_ui(result.get_mpz_t(), 2, exponent);
  return result;
}

}  // namespace

Instance pad_with_dummies(const Instance& inst) {
  const std::size_t n = inst.n();
  const std::size_t padded_m = (inst.m() + n - 1) / n * n;
  if (padded_m == inst.m()) return inst;
  auto rows = inst.utilities();
  for (auto& row : rows) row.resize(padded_m, Rational(0));
  auto good_labels = inst.good_labels();
  if (!good_labels.empty()) {
    for (std::size_t g = inst.m(); g < padded_m; ++g) {
      good_labels.push_back("dummy" + std::to_string(g - inst.m() + 1));
    }
  }
  return Instance(padded_m, std::move(rows), inst.agent_labels(),
                  std::move(good_labels));
}

AssignmentProblem mech1_weights(const Instance& padded,
                                const Bundle& remaining) {
  const std::size_t n = padded.n();
  const std::size_t m = padded.m();
  if (remaining.empty()) {
    throw InputError("mech1_weights needs a non-empty set of remaining goods");
  }
  if (m % n != 0) {
    throw InputError("mech1_weights expects a padded instance (n divides m)");
  }
  for (GoodIndex g : remaining) {
    if (g >= m) throw InputError("remaining good out of range");
  }

  const Integer scale = Integer(static_cast<unsigned long>(n)) *
                        Integer(static_cast<unsigned long>(m)) *
                        power_of_two(m);

  AssignmentProblem prob;
  prob.left_count = n;
  prob.right_count = remaining.size();
  prob.weights.assign(n, std::vector<Integer>(remaining.size()));
  for (AgentIndex a = 0; a < n; ++a) {
    std::vector<Rational> distinct;
    distinct.reserve(remaining.size());
    for (GoodIndex g : remaining) distinct.push_back(padded.utility(a, g));
    std::sort(distinct.begin(), distinct.end(), std::greater<>());
    distinct.erase(std::unique(distinct.begin(), distinct.end()),
                   distinct.end());
    const std::size_t k = distinct.size();

    for (std::size_t j = 0; j < remaining.size(); ++j) {
      const GoodIndex g = remaining[j];
      const auto it = std::find(distinct.begin(), distinct.end(),
                                padded.utility(a, g));
      const std::size_t rank = static_cast<std::size_t>(it - distinct.begin()) + 1;
      const Integer w1 = power_of_two(k - rank);
      const Integer w2 = power_of_two(m - (g + 1));
      prob.weights[a][j] = scale * w1 + w2;
    }
  }
  return prob;
}

MatchingPef1Trace matching_pef1_trace(const Instance& inst,
                                      const AgentOrdering& ordering) {
  if (ordering.size() != inst.n()) {
    throw InputError("ordering size does not match the number of agents");
  }
  const Instance padded = pad_with_dummies(inst);
  const std::size_t n = padded.n();
  const std::size_t rounds = padded.m() / n;

  MatchingPef1Trace trace;
  trace.allocation.bundles.assign(n, {});
  Bundle remaining(padded.m());
  for (GoodIndex g = 0; g < padded.m(); ++g) remaining[g] = g;

  const auto& priority = ordering.pick_order();
  for (std::size_t r = 0; r < rounds; ++r) {
    const AssignmentProblem prob = mech1_weights(padded, remaining);
    const Matching match = max_weight_assignment(prob, priority);
    Bundle matched;
    for (AgentIndex a = 0; a < n; ++a) {
      const GoodIndex g = remaining[match.assignment[a]];
      matched.push_back(g);
      if (g < inst.m()) trace.allocation.bundles[a].push_back(g);
    }
    matched = make_bundle(std::move(matched));
    Bundle rest;
    std::set_difference(remaining.begin(), remaining.end(), matched.begin(),
                        matched.end(), std::back_inserter(rest));
    remaining = std::move(rest);
    trace.round_goods.push_back(std::move(matched));
  }
  for (auto& bundle : trace.allocation.bundles) {
    bundle = make_bundle(std::move(bundle));
  }
  return trace;
}

Allocation matching_pef1(const Instance& inst, const AgentOrdering& ordering) {
  return matching_pef1_trace(inst, ordering).allocation;
}

}  // namespace fairdiv
