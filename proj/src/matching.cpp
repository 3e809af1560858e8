#include "fairdiv/matching.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>

namespace fairdiv {
namespace {

void check_shape(const AssignmentProblem& prob) {
  if (prob.right_count < prob.left_count) {
    throw InputError("assignment needs right_count >= left_count (got " +
                     std::to_string(prob.right_count) + " < " +
                     std::to_string(prob.left_count) + ")");
  }
  if (prob.weights.size() != prob.left_count) {
    throw InputError("weight matrix row count does not match left_count");
  }
  for (const auto& row : prob.weights) {
    if (row.size() != prob.right_count) {
      throw InputError("weight matrix column count does not match right_count");
    }
    for (const auto& w : row) {
      if (sgn(w) < 0) throw InputError("assignment weights must be >= 0");
    }
  }
}

void check_priority(const AssignmentProblem& prob,
                    std::span<const std::size_t> priority) {
  if (priority.size() != prob.left_count) {
    throw InputError("priority must rank every left vertex");
  }
  std::vector<bool> seen(prob.left_count, false);
  for (std::size_t l : priority) {
    if (l >= prob.left_count || seen[l]) {
      throw InputError("priority is not a permutation of the left vertices");
    }
    seen[l] = true;
  }
}

// Hungarian method (shortest augmenting paths with potentials) on the
// rectangular cost matrix cost[i][j], rows <= cols, minimizing total cost.
// Returns the minimum cost; row_to_col receives the optimal assignment.
Integer hungarian_min_cost(const std::vector<std::vector<Integer>>& cost,
                           std::size_t cols,
                           std::vector<std::size_t>* row_to_col) {
  const std::size_t rows = cost.size();
  // 1-based internally; column 0 is the virtual root.
  std::vector<Integer> u(rows + 1, 0), v(cols + 1, 0);
  std::vector<std::size_t> p(cols + 1, 0), way(cols + 1, 0);
  for (std::size_t i = 1; i <= rows; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<std::optional<Integer>> minv(cols + 1);
    std::vector<bool> used(cols + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = p[j0];
      std::optional<Integer> delta;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= cols; ++j) {
        if (used[j]) continue;
        Integer cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (!minv[j] || cur < *minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (!delta || *minv[j] < *delta) {
          delta = *minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= cols; ++j) {
        if (used[j]) {
          u[p[j]] += *delta;
          v[j] -= *delta;
        } else if (minv[j]) {
          *minv[j] -= *delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  Integer total = 0;
  if (row_to_col != nullptr) row_to_col->assign(rows, 0);
  for (std::size_t j = 1; j <= cols; ++j) {
    if (p[j] == 0) continue;
    total += cost[p[j] - 1][j - 1];
    if (row_to_col != nullptr) (*row_to_col)[p[j] - 1] = j - 1;
  }
  return total;
}

}  // namespace

Integer matching_weight(const AssignmentProblem& prob, const Matching& match) {
  Integer total = 0;
  for (std::size_t l = 0; l < match.assignment.size(); ++l) {
    total += prob.weights[l][match.assignment[l]];
  }
  return total;
}

Integer max_assignment_value(const AssignmentProblem& prob,
                             std::span<const std::size_t> left,
                             std::span<const std::size_t> right) {
  if (left.empty()) return 0;
  std::vector<std::vector<Integer>> cost(left.size(),
                                         std::vector<Integer>(right.size()));
  for (std::size_t i = 0; i < left.size(); ++i) {
    for (std::size_t j = 0; j < right.size(); ++j) {
      cost[i][j] = -prob.weights[left[i]][right[j]];
    }
  }
  return -hungarian_min_cost(cost, right.size(), nullptr);
}

Matching max_weight_assignment(const AssignmentProblem& prob,
                               std::span<const std::size_t> priority) {
  check_shape(prob);
  check_priority(prob, priority);
  const std::size_t left = prob.left_count;
  const std::size_t right = prob.right_count;
  if (left == 0) return Matching{};

  // Canonical tie-break folded into the objective: the weights are scaled by
  // R^L and the left vertex at priority p earns (R-1-r) * R^(L-1-p) for right
  // vertex r. The bonus sum is a base-R number whose digits are read in
  // priority order, so it is maximized exactly by the lexicographically
  // smallest assignment, and being < R^L it never outweighs a unit of weight.
  std::vector<Integer> digit_weight(left);
  Integer base = static_cast<unsigned long>(right);
  Integer place = 1;
  for (std::size_t p = left; p-- > 0;) {
    digit_weight[p] = place;
    place *= base;
  }
  const Integer scale = place;

  std::vector<std::vector<Integer>> cost(left, std::vector<Integer>(right));
  for (std::size_t p = 0; p < left; ++p) {
    const std::size_t l = priority[p];
    for (std::size_t r = 0; r < right; ++r) {
      const Integer bonus =
          Integer(static_cast<unsigned long>(right - 1 - r)) * digit_weight[p];
      cost[l][r] = -(prob.weights[l][r] * scale + bonus);
    }
  }
  Matching result;
  hungarian_min_cost(cost, right, &result.assignment);
  return result;
}

Matching brute_force_assignment(const AssignmentProblem& prob,
                                std::span<const std::size_t> priority,
                                std::uint64_t cap) {
  check_shape(prob);
  check_priority(prob, priority);

  // Number of injections: R * (R-1) * ... * (R-L+1).
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < prob.left_count; ++i) {
    const std::uint64_t factor = prob.right_count - i;
    if (count > cap / factor) {
      throw ResourceError("brute-force assignment exceeds enumeration cap " +
                          std::to_string(cap));
    }
    count *= factor;
  }

  // Depth-first in priority order with ascending right indices visits the
  // injections in lexicographic order, so the first maximizer found wins ties.
  const std::size_t depth = prob.left_count;
  std::vector<std::size_t> current(depth, 0);
  std::vector<bool> taken(prob.right_count, false);
  std::optional<Integer> best_weight;
  std::vector<std::size_t> best(depth, 0);

  auto visit = [&](auto&& self, std::size_t level, const Integer& acc) -> void {
    if (level == depth) {
      if (!best_weight || acc > *best_weight) {
        best_weight = acc;
        best = current;
      }
      return;
    }
    const std::size_t l = priority[level];
    for (std::size_t r = 0; r < prob.right_count; ++r) {
      if (taken[r]) continue;
      taken[r] = true;
      current[level] = r;
      self(self, level + 1, acc + prob.weights[l][r]);
      taken[r] = false;
    }
  };
  visit(visit, 0, Integer(0));

  Matching result;
  result.assignment.assign(depth, 0);
  for (std::size_t level = 0; level < depth; ++level) {
    result.assignment[priority[level]] = best[level];
  }
  return result;
}

}  // namespace fairdiv
