#include "fairdiv/instance.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <string>

namespace fairdiv {
namespace {

std::optional<std::uint64_t> cap_override() {
  const char* raw = std::getenv("FAIRDIV_ENUM_CAP");
  if (raw == nullptr) return std::nullopt;
  const std::string text(raw);
  std::uint64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) {
    return std::nullopt;
  }
  return value;
}

std::string good_name(GoodIndex g) { return "g" + std::to_string(g + 1); }

}  // namespace

std::uint64_t enumeration_cap() {
  return cap_override().value_or(kDefaultEnumerationCap);
}

std::uint64_t ordering_cap() {
  return cap_override().value_or(kDefaultOrderingCap);
}

std::uint64_t saturating_power(std::uint64_t base, std::uint64_t exponent,
                               std::uint64_t limit) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    if (base != 0 && result > limit / base) return limit + 1;
    result *= base;
  }
  return result;
}

std::uint64_t saturating_factorial(std::uint64_t n, std::uint64_t limit) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (result > limit / i) return limit + 1;
    result *= i;
  }
  return result;
}

Instance::Instance(std::size_t m, std::vector<std::vector<Rational>> utilities,
                   std::vector<std::string> agent_labels,
                   std::vector<std::string> good_labels)
    : m_(m),
      utilities_(std::move(utilities)),
      agent_labels_(std::move(agent_labels)),
      good_labels_(std::move(good_labels)) {
  if (utilities_.empty()) {
    throw InputError("instance needs at least one agent");
  }
  for (std::size_t a = 0; a < utilities_.size(); ++a) {
    if (utilities_[a].size() != m_) {
      throw InputError("utility row " + std::to_string(a + 1) + " has " +
                       std::to_string(utilities_[a].size()) +
                       " entries, expected " + std::to_string(m_));
    }
    for (std::size_t g = 0; g < m_; ++g) {
      auto& u = utilities_[a][g];
      u.canonicalize();
      if (sgn(u) < 0) {
        throw InputError("negative utility for agent " + std::to_string(a + 1) +
                         ", good " + std::to_string(g + 1));
      }
    }
  }
  if (!agent_labels_.empty() && agent_labels_.size() != utilities_.size()) {
    throw InputError("agent label count does not match n");
  }
  if (!good_labels_.empty() && good_labels_.size() != m_) {
    throw InputError("good label count does not match m");
  }
}

AgentOrdering::AgentOrdering(std::vector<AgentIndex> pick_order)
    : pick_order_(std::move(pick_order)),
      position_of_(pick_order_.size(), pick_order_.size()) {
  const std::size_t n = pick_order_.size();
  for (std::size_t p = 0; p < n; ++p) {
    const AgentIndex a = pick_order_[p];
    if (a >= n) {
      throw InputError("ordering names agent " + std::to_string(a + 1) +
                       " but there are only " + std::to_string(n));
    }
    if (position_of_[a] != n) {
      throw InputError("ordering repeats agent " + std::to_string(a + 1));
    }
    position_of_[a] = p;
  }
}

AgentOrdering AgentOrdering::identity(std::size_t n) {
  std::vector<AgentIndex> order(n);
  std::iota(order.begin(), order.end(), AgentIndex{0});
  return AgentOrdering(std::move(order));
}

AgentOrdering AgentOrdering::reversed(std::size_t n) {
  std::vector<AgentIndex> order(n);
  std::iota(order.rbegin(), order.rend(), AgentIndex{0});
  return AgentOrdering(std::move(order));
}

std::vector<AgentOrdering> all_orderings(std::size_t n) {
  std::vector<AgentOrdering> result;
  std::vector<AgentIndex> order(n);
  std::iota(order.begin(), order.end(), AgentIndex{0});
  do {
    result.emplace_back(order);
  } while (std::next_permutation(order.begin(), order.end()));
  return result;
}

Rational bundle_utility(const Instance& inst, AgentIndex agent,
                        const Bundle& bundle) {
  if (agent >= inst.n()) {
    throw InputError("agent index " + std::to_string(agent + 1) +
                     " out of range");
  }
  Rational total = 0;
  for (GoodIndex g : bundle) {
    if (g >= inst.m()) {
      throw InputError("good index " + std::to_string(g + 1) +
                       " out of range");
    }
    total += inst.utility(agent, g);
  }
  return total;
}

std::optional<std::string> validate_allocation(const Instance& inst,
                                               const Allocation& alloc) {
  if (alloc.bundles.size() != inst.n()) {
    return "allocation has " + std::to_string(alloc.bundles.size()) +
           " bundles for " + std::to_string(inst.n()) + " agents";
  }
  std::vector<bool> seen(inst.m(), false);
  for (const auto& bundle : alloc.bundles) {
    for (GoodIndex g : bundle) {
      if (g >= inst.m()) return good_name(g) + " out of range";
      if (seen[g]) return good_name(g) + " duplicated";
      seen[g] = true;
    }
  }
  for (GoodIndex g = 0; g < inst.m(); ++g) {
    if (!seen[g]) return good_name(g) + " unassigned";
  }
  return std::nullopt;
}

Instance scale_profile(const Instance& inst,
                       const std::vector<Rational>& scalars) {
  if (scalars.size() != inst.n()) {
    throw InputError("expected " + std::to_string(inst.n()) +
                     " scalars, got " + std::to_string(scalars.size()));
  }
  auto rows = inst.utilities();
  for (std::size_t a = 0; a < rows.size(); ++a) {
    if (sgn(scalars[a]) <= 0) {
      throw InputError("scalar for agent " + std::to_string(a + 1) +
                       " must be positive");
    }
    for (auto& u : rows[a]) u *= scalars[a];
  }
  return Instance(inst.m(), std::move(rows), inst.agent_labels(),
                  inst.good_labels());
}

Bundle make_bundle(std::vector<GoodIndex> goods) {
  std::sort(goods.begin(), goods.end());
  goods.erase(std::unique(goods.begin(), goods.end()), goods.end());
  return goods;
}

}  // namespace fairdiv
