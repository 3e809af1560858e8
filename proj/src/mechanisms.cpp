#include "fairdiv/mechanisms.hpp"

#include <string>

namespace fairdiv {

std::string_view mechanism_name(MechanismId id) {
  switch (id) {
    case MechanismId::kRoundRobin:
      return "round_robin";
    case MechanismId::kEnvyCycle:
      return "envy_cycle";
    case MechanismId::kMatchingPef1:
      return "matching_pef1";
    case MechanismId::kAdjustedWinnerDiscrete:
      return "adjusted_winner_discrete";
    case MechanismId::kAdjustedWinnerModified:
      return "adjusted_winner_modified";
    case MechanismId::kMnwBruteforce:
      return "mnw_bruteforce";
  }
  return "unknown";
}

std::optional<MechanismId> parse_mechanism(std::string_view name) {
  for (MechanismId id : kAllMechanisms) {
    if (mechanism_name(id) == name) return id;
  }
  return std::nullopt;
}

Allocation run_mechanism(MechanismId id, const Instance& inst,
                         const AgentOrdering& ordering) {
  if (ordering.size() != inst.n()) {
    throw InputError("ordering has " + std::to_string(ordering.size()) +
                     " agents, instance has " + std::to_string(inst.n()));
  }
  switch (id) {
    case MechanismId::kRoundRobin:
      return round_robin(inst, ordering);
    case MechanismId::kEnvyCycle:
      return envy_cycle(inst, ordering);
    case MechanismId::kMatchingPef1:
      return matching_pef1(inst, ordering);
    case MechanismId::kAdjustedWinnerDiscrete:
      return adjusted_winner_discrete(inst, ordering);
    case MechanismId::kAdjustedWinnerModified:
      return adjusted_winner_modified(inst, ordering);
    case MechanismId::kMnwBruteforce:
      return mnw_bruteforce(inst, ordering);
  }
  throw InputError("unknown mechanism");
}

}  // namespace fairdiv
