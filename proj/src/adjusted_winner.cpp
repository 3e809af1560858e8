#include <algorithm>
#include <stdexcept>
#include <vector>

#include "fairdiv/mechanisms.hpp"

namespace fairdiv {
namespace {

void require_two_agents(const Instance& inst, const char* what) {
  if (inst.n() != 2) {
    throw InputError(std::string(what) + " requires exactly 2 agents, got " +
                     std::to_string(inst.n()));
  }
}

// Orders goods by u_num(g)/u_den(g) non-increasing, smaller index first on
// ties. Ratios are compared cross-multiplied; both utilities are positive on
// the shared goods this is applied to.
std::vector<GoodIndex> sort_by_ratio(const Instance& inst, const Bundle& goods,
                                     AgentIndex num, AgentIndex den) {
  std::vector<GoodIndex> order(goods.begin(), goods.end());
  std::stable_sort(order.begin(), order.end(), [&](GoodIndex x, GoodIndex y) {
    return inst.utility(num, x) * inst.utility(den, y) >
           inst.utility(num, y) * inst.utility(den, x);
  });
  return order;
}

Rational sum_over(const Instance& inst, AgentIndex agent,
                  const std::vector<GoodIndex>& goods) {
  Rational total = 0;
  for (GoodIndex g : goods) total += inst.utility(agent, g);
  return total;
}

Bundle join(std::initializer_list<const std::vector<GoodIndex>*> parts) {
  std::vector<GoodIndex> all;
  for (const auto* part : parts) all.insert(all.end(), part->begin(), part->end());
  return make_bundle(std::move(all));
}

}  // namespace

GoodPartition partition_goods(const Instance& inst) {
  require_two_agents(inst, "partition_goods");
  GoodPartition parts;
  for (GoodIndex g = 0; g < inst.m(); ++g) {
    const bool first = sgn(inst.utility(0, g)) > 0;
    const bool second = sgn(inst.utility(1, g)) > 0;
    if (first && second) {
      parts.shared.push_back(g);
    } else if (first) {
      parts.only_first.push_back(g);
    } else if (second) {
      parts.only_second.push_back(g);
    } else {
      parts.unvalued.push_back(g);
    }
  }
  return parts;
}

FractionalSplit equitable_split(const Instance& inst) {
  require_two_agents(inst, "equitable_split");
  const GoodPartition parts = partition_goods(inst);
  if (parts.shared.empty()) {
    throw InputError(
        "equitable_split needs at least one good valued by both agents");
  }

  FractionalSplit split;
  split.sorted_shared = sort_by_ratio(inst, parts.shared, 0, 1);
  const auto& order = split.sorted_shared;
  const Rational total1 = sum_over(inst, 0, order);
  const Rational total2 = sum_over(inst, 1, order);

  // Prefix sums for agent 0, suffix sums for agent 1.
  Rational prefix1 = 0;
  Rational suffix2 = total2;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const GoodIndex g = order[k];
    const Rational& x1 = inst.utility(0, g);
    const Rational& x2 = inst.utility(1, g);
    suffix2 -= x2;
    // (prefix1 + lambda x1) / total1 = (suffix2 + (1 - lambda) x2) / total2
    const Rational lambda =
        ((suffix2 + x2) / total2 - prefix1 / total1) / (x1 / total1 + x2 / total2);
    if (sgn(lambda) >= 0 && lambda <= 1) {
      split.p1.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k));
      split.p2.assign(order.begin() + static_cast<std::ptrdiff_t>(k) + 1,
                      order.end());
      split.split_good = g;
      split.lambda1 = lambda;
      split.lambda2 = Rational(1) - lambda;
      break;
    }
    prefix1 += x1;
    if (k + 1 == order.size()) {
      throw std::logic_error("equitable_split: no boundary with lambda in [0,1]");
    }
  }

  // Envy-freeness of the fractional allocation, exclusive goods included.
  const std::vector<GoodIndex> mine1 = join({&parts.only_first, &split.p1});
  const std::vector<GoodIndex> mine2 = join({&parts.only_second, &split.p2});
  const Rational& s1 = inst.utility(0, split.split_good);
  const Rational& s2 = inst.utility(1, split.split_good);
  const bool ef1 = sum_over(inst, 0, mine1) + split.lambda1 * s1 >=
                   sum_over(inst, 0, mine2) + split.lambda2 * s1;
  const bool ef2 = sum_over(inst, 1, mine2) + split.lambda2 * s2 >=
                   sum_over(inst, 1, mine1) + split.lambda1 * s2;
  if (!ef1 || !ef2) {
    throw std::logic_error("equitable_split: fractional split is not envy-free");
  }
  return split;
}

Allocation adjusted_winner_discrete(const Instance& inst,
                                    const AgentOrdering& ordering) {
  require_two_agents(inst, "adjusted_winner_discrete");
  if (ordering.size() != 2) throw InputError("ordering must have 2 agents");
  const GoodPartition parts = partition_goods(inst);
  const AgentIndex first = ordering.agent_at(0);
  const AgentIndex second = ordering.agent_at(1);
  const Bundle& exclusive_first = first == 0 ? parts.only_first : parts.only_second;
  const Bundle& exclusive_second = first == 0 ? parts.only_second : parts.only_first;

  std::vector<GoodIndex> held_first = join({&exclusive_first, &parts.shared});
  std::vector<GoodIndex> held_second = exclusive_second;

  // The second agent is EF1 toward the first once dropping the first agent's
  // most valuable good (in the second agent's eyes) removes the envy.
  auto second_is_ef1 = [&]() {
    Rational best = 0;
    for (GoodIndex g : held_first) best = std::max(best, inst.utility(second, g));
    return sum_over(inst, second, held_second) >=
           sum_over(inst, second, held_first) - best;
  };

  for (GoodIndex g : sort_by_ratio(inst, parts.shared, second, first)) {
    if (second_is_ef1()) break;
    held_first.erase(std::find(held_first.begin(), held_first.end(), g));
    held_second.push_back(g);
  }

  Allocation alloc{std::vector<Bundle>(2)};
  alloc.bundles[first] = make_bundle(std::move(held_first));
  alloc.bundles[second] = make_bundle(std::move(held_second));
  alloc.bundles[0] = join({&alloc.bundles[0], &parts.unvalued});
  return alloc;
}

Allocation adjusted_winner_modified(const Instance& inst,
                                    const AgentOrdering& ordering) {
  require_two_agents(inst, "adjusted_winner_modified");
  if (ordering.size() != 2) throw InputError("ordering must have 2 agents");
  const GoodPartition parts = partition_goods(inst);

  Allocation alloc{std::vector<Bundle>(2)};
  if (parts.shared.empty()) {
    alloc.bundles[0] = join({&parts.only_first, &parts.unvalued});
    alloc.bundles[1] = parts.only_second;
    return alloc;
  }

  const FractionalSplit split = equitable_split(inst);
  const AgentIndex first = ordering.agent_at(0);
  const AgentIndex second = ordering.agent_at(1);
  const Rational& lambda_first = first == 0 ? split.lambda1 : split.lambda2;
  const Rational& lambda_second = second == 0 ? split.lambda1 : split.lambda2;
  const AgentIndex split_owner = lambda_first >= lambda_second ? first : second;

  const std::vector<GoodIndex> split_good{split.split_good};
  const std::vector<GoodIndex> none;
  alloc.bundles[0] = join({&parts.only_first, &split.p1, &parts.unvalued,
                           split_owner == 0 ? &split_good : &none});
  alloc.bundles[1] = join({&parts.only_second, &split.p2,
                           split_owner == 1 ? &split_good : &none});
  return alloc;
}

}  // namespace fairdiv
