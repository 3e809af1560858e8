#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "fairdiv/instance.hpp"
#include "fairdiv/mechanisms.hpp"

namespace fairdiv {

// envier values envied's bundle above its own (EF), or above it even after
// dropping the most valuable good of envied's bundle (EF1).
struct EnvyWitness {
  AgentIndex envier = 0;
  AgentIndex envied = 0;

  bool operator==(const EnvyWitness&) const = default;
};

// All checks below return std::nullopt on pass and a witness on failure.
std::optional<EnvyWitness> check_envy_free(const Instance& inst,
                                           const Allocation& alloc);
std::optional<EnvyWitness> check_ef1(const Instance& inst,
                                     const Allocation& alloc);

// Exhaustive search for an allocation that gives every agent at least as much
// and someone strictly more. The witness is the first such allocation in the
// enumeration that assigns goods in index order to agents 0..n-1. Throws
// ResourceError if n^m exceeds cap.
std::optional<Allocation> check_po_bruteforce(
    const Instance& inst, const Allocation& alloc,
    std::uint64_t cap = enumeration_cap());

Rational nash_welfare(const Instance& inst, const Allocation& alloc);

struct Removal {
  std::size_t count = 0;
  Bundle goods;  // sorted

  bool operator==(const Removal&) const = default;
};

// Fewest goods to drop from `other` so that evaluator's value of the rest is
// at most own_value. Goods are dropped greedily by value, highest first,
// smaller index first on ties; for additive utilities that is optimal.
Removal min_removal_k(const Instance& inst, AgentIndex evaluator,
                      const Rational& own_value, const Bundle& other);

// Agent `agent` gets less under `current` than under `other`, and only
// dropping `removed_goods` (size removal_count) from its `other` bundle
// closes the gap.
struct PefWitness {
  AgentIndex agent = 0;
  AgentOrdering current;
  AgentOrdering other;
  std::size_t removal_count = 0;
  Bundle removed_goods;
};

struct OrderedOutcome {
  AgentOrdering ordering;
  Allocation allocation;
};

// Runs the mechanism under all n! orderings (lexicographic order). Throws
// ResourceError when n! exceeds cap.
std::vector<OrderedOutcome> run_all_orderings(
    MechanismId id, const Instance& inst, std::uint64_t cap = ordering_cap());

struct PefDegree {
  std::size_t degree = 0;
  std::optional<PefWitness> witness;  // absent when degree is 0
};

// Instance-level degree of position envy over precomputed outcomes: the
// largest min_removal_k over agents and ordered pairs of orderings. The
// witness is the first maximizer scanning agents, then the ordering with the
// agent's lowest own value, then other orderings, all in enumeration order.
PefDegree pef_degree_of(const Instance& inst,
                        const std::vector<OrderedOutcome>& outcomes);

// Exact for this instance; a lower bound on the mechanism's degree over all
// profiles.
PefDegree pef_degree(MechanismId id, const Instance& inst,
                     std::uint64_t cap = ordering_cap());

struct ScaleWitness {
  Allocation unscaled;
  Allocation scaled;
};

std::optional<ScaleWitness> check_scale_invariance(
    MechanismId id, const Instance& inst, const std::vector<Rational>& scalars,
    const AgentOrdering& ordering);

}  // namespace fairdiv
