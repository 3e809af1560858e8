#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fairdiv/instance.hpp"
#include "fairdiv/rational.hpp"

namespace fairdiv {

// Complete bipartite graph between left_count agents and right_count goods
// with non-negative integer edge weights, weights[left][right].
struct AssignmentProblem {
  std::size_t left_count = 0;
  std::size_t right_count = 0;
  std::vector<std::vector<Integer>> weights;
};

// assignment[left] = matched right vertex; injective.
struct Matching {
  std::vector<std::size_t> assignment;

  bool operator==(const Matching&) const = default;
};

Integer matching_weight(const AssignmentProblem& prob, const Matching& match);

// Left-perfect maximum-weight matching. Ties between maximizers are broken
// canonically: left vertices are visited in priority order and each takes the
// smallest right index that still extends to some maximizer. Equivalently,
// the result is the lexicographically smallest maximizer when assignments are
// read in priority order.
//
// priority must be a permutation of 0..left_count-1. Throws InputError if
// right_count < left_count or the shapes disagree.
Matching max_weight_assignment(const AssignmentProblem& prob,
                               std::span<const std::size_t> priority);

// Same contract, by enumerating every injection. Throws ResourceError when
// the number of injections exceeds cap.
Matching brute_force_assignment(const AssignmentProblem& prob,
                                std::span<const std::size_t> priority,
                                std::uint64_t cap = enumeration_cap());

// Value of a maximum-weight left-perfect matching restricted to the given
// left and right vertex subsets (right.size() >= left.size()).
Integer max_assignment_value(const AssignmentProblem& prob,
                             std::span<const std::size_t> left,
                             std::span<const std::size_t> right);

}  // namespace fairdiv
