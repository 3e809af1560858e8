#include "fairdiv/generators.hpp"

#include <bit>
#include <limits>
#include <random>
#include <string>
#include <vector>

namespace fairdiv {
namespace {

using Matrix = std::vector<std::vector<Rational>>;

Matrix zeros(std::size_t n, std::size_t m) {
  return Matrix(n, std::vector<Rational>(m, Rational(0)));
}

std::size_t floor_log2(std::size_t n) {
  return static_cast<std::size_t>(std::bit_width(n)) - 1;
}

}  // namespace

Instance gen_example4() {
  const Rational c1 = 3, c2 = 2, c3 = 1, o = 0;
  return Instance(5, {
                         {c1, o, o, c3, c2},
                         {o, c1, o, o, c2},
                         {c1, o, c2, o, o},
                         {o, c1, c3, c2, o},
                     });
}

Instance gen_rr_log_lower_bound(std::size_t n, std::size_t rounds) {
  if (n < 1) throw InputError("rr_log_lower_bound needs n >= 1");
  const std::size_t levels = floor_log2(n);
  if (rounds < 1 || rounds < levels) {
    throw InputError("rr_log_lower_bound needs rounds >= max(1, floor(log2 n)) = " +
                     std::to_string(std::max<std::size_t>(1, levels)));
  }
  const std::size_t m = n * rounds;
  // 1-based agent i, round r -> the good agent i picks in round r.
  auto pick = [n](std::size_t i, std::size_t r) { return (r - 1) * n + (i - 1); };

  Matrix u = zeros(n, m);
  const Rational big = static_cast<long>(rounds - levels + 2);
  for (std::size_t r = 1; r <= rounds; ++r) {
    u[0][pick(1, r)] = r <= levels ? big : Rational(1);
    for (std::size_t i = 2; i <= n; ++i) u[i - 1][pick(i, r)] = 1;
  }
  // Agents in the upper half of the current block also like the goods the
  // lower half takes, which under the reversed ordering pushes a1 out of its
  // C-valued picks one round at a time.
  for (std::size_t r = 1; r <= levels; ++r) {
    const std::size_t top = n >> (r - 1);
    const std::size_t bottom = n >> r;
    for (std::size_t i = top; i > bottom; --i) {
      const std::size_t j = top - i + 1;
      u[i - 1][pick(j, r)] = 1;
    }
  }
  return Instance(m, std::move(u));
}

Instance gen_aw_counterexample(std::size_t m) {
  if (m < 3) throw InputError("aw_counterexample needs m >= 3");
  Matrix u = zeros(2, m);
  const Rational eps(1, static_cast<unsigned long>(m + 1));
  for (GoodIndex g = 0; g < m; ++g) {
    u[0][g] = 1;
    u[1][g] = g + 1 == m ? Rational(1) : eps;
  }
  return Instance(m, std::move(u));
}

Instance gen_ec_worst(std::size_t n, std::size_t m) {
  if (n < 1) throw InputError("ec_worst needs n >= 1");
  if (m < n) throw InputError("ec_worst needs m >= n");
  Matrix u = zeros(n, m);
  for (auto& value : u[0]) value = 1;
  return Instance(m, std::move(u));
}

Instance gen_random(std::size_t n, std::size_t m, std::uint64_t seed,
                    std::uint64_t max_value) {
  if (n < 1) throw InputError("random needs n >= 1");
  if (max_value < 1) throw InputError("random needs max_value >= 1");
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::mt19937_64 engine(seed);
  Matrix u = zeros(n, m);
  if (max_value == kMax) {
    for (auto& row : u) {
      for (auto& value : row) value = Rational(Integer(std::to_string(engine())));
    }
    return Instance(m, std::move(u));
  }
  const std::uint64_t range = max_value + 1;
  const std::uint64_t excess = (kMax % range + 1) % range;  // 2^64 mod range
  const std::uint64_t accept_max = kMax - excess;
  for (auto& row : u) {
    for (auto& value : row) {
      std::uint64_t x = engine();
      while (x > accept_max) x = engine();
      value = Rational(Integer(std::to_string(x % range)));
    }
  }
  return Instance(m, std::move(u));
}

std::string_view family_name(Family family) {
  switch (family) {
    case Family::kExample4:
      return "example4";
    case Family::kRrLogLowerBound:
      return "rr_log_lower_bound";
    case Family::kAwCounterexample:
      return "aw_counterexample";
    case Family::kEcWorst:
      return "ec_worst";
    case Family::kTable1N5:
      return "table1_n5";
    case Family::kRandom:
      return "random";
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : {Family::kExample4, Family::kRrLogLowerBound,
                   Family::kAwCounterexample, Family::kEcWorst,
                   Family::kTable1N5, Family::kRandom}) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

Instance generate(const GeneratorSpec& spec) {
  switch (spec.family) {
    case Family::kExample4:
      return gen_example4();
    case Family::kRrLogLowerBound:
      return gen_rr_log_lower_bound(spec.n, spec.rounds);
    case Family::kAwCounterexample:
      return gen_aw_counterexample(spec.m);
    case Family::kEcWorst:
      return gen_ec_worst(spec.n, spec.m);
    case Family::kTable1N5:
      return gen_rr_log_lower_bound(5, 3);
    case Family::kRandom:
      return gen_random(spec.n, spec.m, spec.seed, spec.max_value);
  }
  throw InputError("unknown generator family");
}

}  // namespace fairdiv
