#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "fairdiv/instance.hpp"

namespace fairdiv {

// The 4x5 round-robin profile with constants c1 > c2 > c3 set to 3, 2, 1.
Instance gen_example4();

// Profile on which round-robin has position-envy degree >= floor(log2 n).
// m = n * rounds; the good agent a picks in round r under the identity
// ordering sits at index (r-1)*n + (a-1). a1 values its first floor(log2 n)
// picks at C = rounds - floor(log2 n) + 2 and the rest at 1.
// Requires n >= 1, rounds >= 1 and rounds >= floor(log2 n).
Instance gen_rr_log_lower_bound(std::size_t n, std::size_t rounds);

// Two agents: a1 values everything 1; a2 values the last good 1 and the
// others 1/(m+1). Requires m >= 3.
Instance gen_aw_counterexample(std::size_t m);

// a1 values everything 1, everyone else values everything 0. Requires m >= n.
Instance gen_ec_worst(std::size_t n, std::size_t m);

// Integer utilities uniform in [0, max_value], drawn row-major from
// std::mt19937_64 seeded with `seed`. Each draw x is rejected while
// x >= 2^64 - (2^64 mod (max_value + 1)) and otherwise mapped to
// x mod (max_value + 1). Requires n >= 1 and max_value >= 1.
Instance gen_random(std::size_t n, std::size_t m, std::uint64_t seed,
                    std::uint64_t max_value);

// table1_n5 is rr_log_lower_bound with n = 5, rounds = 3.
enum class Family {
  kExample4,
  kRrLogLowerBound,
  kAwCounterexample,
  kEcWorst,
  kTable1N5,
  kRandom,
};

std::string_view family_name(Family family);
std::optional<Family> parse_family(std::string_view name);

struct GeneratorSpec {
  Family family = Family::kRandom;
  std::size_t n = 2;
  std::size_t m = 0;
  std::size_t rounds = 1;
  std::uint64_t seed = 0;
  std::uint64_t max_value = 10;
};

Instance generate(const GeneratorSpec& spec);

}  // namespace fairdiv
