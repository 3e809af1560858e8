#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fairdiv/errors.hpp"
#include "fairdiv/rational.hpp"

namespace fairdiv {

using AgentIndex = std::size_t;
using GoodIndex = std::size_t;

// Caps for brute-force enumeration. FAIRDIV_ENUM_CAP, when set to a positive
// integer, replaces both defaults.
inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;
inline constexpr std::uint64_t kDefaultOrderingCap = 40'320;  // 8!
std::uint64_t enumeration_cap();
std::uint64_t ordering_cap();

// base^exponent, saturating at limit + 1 so callers can compare against limit.
std::uint64_t saturating_power(std::uint64_t base, std::uint64_t exponent,
                               std::uint64_t limit);
std::uint64_t saturating_factorial(std::uint64_t n, std::uint64_t limit);

// Sorted, duplicate-free list of good indices.
using Bundle = std::vector<GoodIndex>;

class Instance {
 public:
  // utilities must be agent-major, each row of length m, all entries >= 0.
  Instance(std::size_t m, std::vector<std::vector<Rational>> utilities,
           std::vector<std::string> agent_labels = {},
           std::vector<std::string> good_labels = {});

  std::size_t n() const { return utilities_.size(); }
  std::size_t m() const { return m_; }

  const Rational& utility(AgentIndex agent, GoodIndex good) const {
    return utilities_[agent][good];
  }
  const std::vector<Rational>& row(AgentIndex agent) const {
    return utilities_[agent];
  }
  const std::vector<std::vector<Rational>>& utilities() const {
    return utilities_;
  }
  const std::vector<std::string>& agent_labels() const { return agent_labels_; }
  const std::vector<std::string>& good_labels() const { return good_labels_; }

  bool operator==(const Instance&) const = default;

 private:
  std::size_t m_;
  std::vector<std::vector<Rational>> utilities_;
  std::vector<std::string> agent_labels_;
  std::vector<std::string> good_labels_;
};

// Bijection agents -> positions. positions()[p] is the agent standing at
// 0-based position p, i.e. the pick order.
class AgentOrdering {
 public:
  AgentOrdering() = default;
  explicit AgentOrdering(std::vector<AgentIndex> pick_order);

  static AgentOrdering identity(std::size_t n);
  static AgentOrdering reversed(std::size_t n);

  std::size_t size() const { return pick_order_.size(); }
  const std::vector<AgentIndex>& pick_order() const { return pick_order_; }
  AgentIndex agent_at(std::size_t position) const {
    return pick_order_[position];
  }
  std::size_t position_of(AgentIndex agent) const {
    return position_of_[agent];
  }

  bool operator==(const AgentOrdering& other) const {
    return pick_order_ == other.pick_order_;
  }

 private:
  std::vector<AgentIndex> pick_order_;
  std::vector<std::size_t> position_of_;
};

// All n! orderings in lexicographic order of their pick lists.
std::vector<AgentOrdering> all_orderings(std::size_t n);

// Bundles are indexed by agent, not by position.
struct Allocation {
  std::vector<Bundle> bundles;

  bool operator==(const Allocation&) const = default;
};

Rational bundle_utility(const Instance& inst, AgentIndex agent,
                        const Bundle& bundle);

// Empty optional when the bundles partition {0, ..., m-1}; otherwise a
// message naming the first duplicated, out-of-range or missing good (1-based).
std::optional<std::string> validate_allocation(const Instance& inst,
                                               const Allocation& alloc);

Instance scale_profile(const Instance& inst,
                       const std::vector<Rational>& scalars);

Bundle make_bundle(std::vector<GoodIndex> goods);

}  // namespace fairdiv
