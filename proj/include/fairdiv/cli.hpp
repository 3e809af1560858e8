#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fairdiv/instance.hpp"
#include "fairdiv/mechanisms.hpp"

namespace fairdiv {

// Process exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitError = 2;

struct AuditOptions {
  MechanismId mechanism = MechanismId::kRoundRobin;
  // Any of ef1, ef, po, pef_degree, scale, in report order.
  std::vector<std::string> checks{"ef1", "po", "pef_degree", "scale"};
  std::optional<std::vector<Rational>> scalars;  // default 2, 3, ..., n+1
  std::optional<AgentOrdering> ordering;         // default: every ordering
  bool require_pef1 = false;
  bool timing = true;
};

struct AuditOutcome {
  std::string json;
  bool all_passed = true;
};

// Throws InputError / ResourceError; the CLI maps those to exit code 2.
AuditOutcome run_audit(const Instance& inst, const AuditOptions& options);

inline constexpr std::string_view kSweepHeader =
    "seed,n,m,degree,ef1,po,max_bundle,wall_ms,error";

struct SweepOptions {
  MechanismId mechanism = MechanismId::kRoundRobin;
  std::size_t count = 0;
  std::size_t n = 2;
  std::size_t m = 0;
  std::uint64_t max_value = 10;
  std::uint64_t seed = 0;
  bool with_fixtures = false;
  bool timing = true;
  unsigned jobs = 1;
};

// Writes the header and one row per instance, in instance order. Random
// instance i uses seed + i. Per-instance failures land in the error column.
void run_sweep(const SweepOptions& options, std::ostream& out);

// Full command line, args[0] being the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace fairdiv
