#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "fairdiv/instance.hpp"
#include "fairdiv/matching.hpp"

namespace fairdiv {

enum class MechanismId {
  kRoundRobin,
  kEnvyCycle,
  kMatchingPef1,
  kAdjustedWinnerDiscrete,
  kAdjustedWinnerModified,
  kMnwBruteforce,
};

inline constexpr MechanismId kAllMechanisms[] = {
    MechanismId::kRoundRobin,           MechanismId::kEnvyCycle,
    MechanismId::kMatchingPef1,         MechanismId::kAdjustedWinnerDiscrete,
    MechanismId::kAdjustedWinnerModified, MechanismId::kMnwBruteforce,
};

std::string_view mechanism_name(MechanismId id);
std::optional<MechanismId> parse_mechanism(std::string_view name);

// Every mechanism is a pure function of (instance, ordering). The ordering
// must have size inst.n(); mechanisms restricted to two agents throw
// InputError otherwise.
Allocation run_mechanism(MechanismId id, const Instance& inst,
                         const AgentOrdering& ordering);

// Agents pick in position order, round after round; each pick is the
// smallest-index good among those the picker values most.
Allocation round_robin(const Instance& inst, const AgentOrdering& ordering);

// ---- envy-cycle ----------------------------------------------------------

// Adjacency matrix: envies[a][b] iff u_a(P_a) < u_a(P_b).
struct EnvyGraph {
  std::vector<std::vector<bool>> envies;

  std::size_t edge_count() const;
  bool is_envied(AgentIndex agent) const;
};

EnvyGraph build_envy_graph(const Instance& inst,
                           const std::vector<Bundle>& partial);

struct CycleResolution {
  std::vector<AgentIndex> cycle;  // cycle[i] envies cycle[i+1] (wrapping)
  std::size_t edges_before = 0;
  std::size_t edges_after = 0;
};

struct EnvyCycleTrace {
  Allocation allocation;
  std::vector<CycleResolution> resolutions;
  std::size_t graph_operations = 0;
};

EnvyCycleTrace envy_cycle_trace(const Instance& inst,
                                const AgentOrdering& ordering);
Allocation envy_cycle(const Instance& inst, const AgentOrdering& ordering);

// ---- matching-based PEF1 mechanism ----------------------------------------

// Edge weights for one round over the padded instance. Row a, column j refers
// to remaining[j]. Weight = n*m*2^m * w1 + w2 where w1 = 2^(k_a - rank) with
// rank the 1-based position of u_a(g) among the k_a distinct values agent a
// has over the remaining goods, and w2 = 2^(m - j) for the good's 1-based
// global index j.
AssignmentProblem mech1_weights(const Instance& padded, const Bundle& remaining);

// Appends zero-valued goods until m is a multiple of n.
Instance pad_with_dummies(const Instance& inst);

struct MatchingPef1Trace {
  Allocation allocation;
  // Goods (padded indices) matched in each round, sorted.
  std::vector<Bundle> round_goods;
};

MatchingPef1Trace matching_pef1_trace(const Instance& inst,
                                      const AgentOrdering& ordering);
Allocation matching_pef1(const Instance& inst, const AgentOrdering& ordering);

// ---- two-agent mechanisms -------------------------------------------------

struct GoodPartition {
  Bundle only_first;   // valued by agent 0 only
  Bundle only_second;  // valued by agent 1 only
  Bundle shared;       // valued by both
  Bundle unvalued;     // valued by neither; not used by the mechanisms
};

GoodPartition partition_goods(const Instance& inst);

// Minimally fractional, equitable allocation of the shared goods. p1/p2 keep
// the ratio order u_0(g)/u_1(g) non-increasing with index tie-break; p1 is the
// prefix before the split good, p2 the suffix after it.
struct FractionalSplit {
  std::vector<GoodIndex> sorted_shared;
  std::vector<GoodIndex> p1;
  std::vector<GoodIndex> p2;
  GoodIndex split_good = 0;
  Rational lambda1;
  Rational lambda2;
};

FractionalSplit equitable_split(const Instance& inst);

Allocation adjusted_winner_discrete(const Instance& inst,
                                    const AgentOrdering& ordering);
Allocation adjusted_winner_modified(const Instance& inst,
                                    const AgentOrdering& ordering);

// ---- maximum Nash welfare -------------------------------------------------

// Lexicographic objective used to rank allocations: number of agents with
// positive utility first, then the product of those positive utilities.
struct NashObjective {
  std::size_t positive_agents = 0;
  Rational product = 0;

  auto operator<=>(const NashObjective& other) const {
    if (positive_agents != other.positive_agents) {
      return positive_agents <=> other.positive_agents;
    }
    return cmp(product, other.product) <=> 0;
  }
  bool operator==(const NashObjective& other) const {
    return positive_agents == other.positive_agents && product == other.product;
  }
};

NashObjective nash_objective(const Instance& inst, const Allocation& alloc);

// First maximizer of NashObjective in the enumeration that assigns goods in
// index order to agents scanned in position order. Throws ResourceError when
// n^m exceeds cap.
Allocation mnw_bruteforce(const Instance& inst, const AgentOrdering& ordering,
                          std::uint64_t cap = enumeration_cap());

}  // namespace fairdiv
