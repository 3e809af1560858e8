#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fairdiv/instance.hpp"
#include "fairdiv/mechanisms.hpp"

namespace fairdiv {

// Instance file:
//   {"agents": [...]?, "goods": [...]?, "m": <int>, "utilities": [[...]]}
// Utilities are strings "p", "p/q" or finite decimals; plain JSON integers are
// accepted on input, floating-point numbers are not. Output always writes
// lowest-terms strings, so serialize(parse(serialize(x))) == serialize(x).
Instance parse_instance(std::string_view json_text);
std::string serialize_instance(const Instance& inst);

// Output of a single mechanism run. Agents, goods and positions are 1-based
// in the JSON form.
struct RunResult {
  MechanismId mechanism = MechanismId::kRoundRobin;
  AgentOrdering ordering;
  Allocation allocation;
  std::vector<Rational> utilities;

  bool operator==(const RunResult&) const = default;
};

RunResult make_run_result(MechanismId mechanism, const Instance& inst,
                          const AgentOrdering& ordering,
                          const Allocation& allocation);
std::string serialize_run_result(const RunResult& result);
RunResult parse_run_result(std::string_view json_text);

// "3,1,2" -> agents in pick order, 1-based on input. Must be a permutation
// of 1..n.
AgentOrdering parse_ordering(std::string_view text, std::size_t n);
std::string format_ordering(const AgentOrdering& ordering);

// Comma-separated rationals, e.g. "1,3/2,0.25".
std::vector<Rational> parse_rational_list(std::string_view text);

std::string read_text_file(const std::string& path);

}  // namespace fairdiv
