#include <gtest/gtest.h>

#include "fairdiv/audit.hpp"
#include "fairdiv/generators.hpp"
#include "fairdiv/mechanisms.hpp"
#include "test_support.hpp"

namespace fairdiv {
namespace {

using testing::alloc_of;
using testing::make_instance;

const AgentOrdering kForward = AgentOrdering::identity(2);
const AgentOrdering kBackward = AgentOrdering::reversed(2);

TEST(MechanismNameTest, RoundTrips) {
  for (MechanismId id : kAllMechanisms) {
    EXPECT_EQ(parse_mechanism(mechanism_name(id)), id);
  }
  EXPECT_FALSE(parse_mechanism("nope"));
}

TEST(RunMechanismTest, RejectsOrderingOfWrongSize) {
  const Instance inst = make_instance({{1, 2}, {2, 1}});
  for (MechanismId id : kAllMechanisms) {
    EXPECT_THROW(run_mechanism(id, inst, AgentOrdering::identity(3)), InputError);
  }
}

TEST(RoundRobinTest, Example4Identity) {
  EXPECT_EQ(round_robin(gen_example4(), AgentOrdering::identity(4)),
            alloc_of({{0, 4}, {1}, {2}, {3}}));
}

TEST(RoundRobinTest, Example4Reverse) {
  EXPECT_EQ(round_robin(gen_example4(), AgentOrdering::reversed(4)),
            alloc_of({{3}, {4}, {0}, {1, 2}}));
}

TEST(RoundRobinTest, NoGoods) {
  const Instance inst(0, {{}, {}, {}});
  EXPECT_EQ(round_robin(inst, AgentOrdering::identity(3)), alloc_of({{}, {}, {}}));
}

TEST(EnvyCycleTest, EveryGoodToTheOnlyCaringAgentWhenFirst) {
  const Instance inst = gen_ec_worst(2, 4);
  EXPECT_EQ(envy_cycle(inst, kForward), alloc_of({{0, 1, 2, 3}, {}}));
}

TEST(EnvyCycleTest, AlternatesWhenCaringAgentIsSecond) {
  const Instance inst = gen_ec_worst(2, 4);
  EXPECT_EQ(envy_cycle(inst, kBackward), alloc_of({{1, 3}, {0, 2}}));
}

TEST(EnvyCycleTest, SingleGoodGoesToFirstPosition) {
  const Instance inst = gen_random(3, 1, 4, 10);
  for (const auto& pi : all_orderings(3)) {
    const Allocation alloc = envy_cycle(inst, pi);
    EXPECT_EQ(alloc.bundles[pi.agent_at(0)], (Bundle{0}));
  }
}

TEST(EnvyCycleTest, ThreeAgentWorstCase) {
  const Instance inst = gen_ec_worst(3, 3);
  EXPECT_EQ(envy_cycle(inst, AgentOrdering::identity(3)).bundles[0], (Bundle{0, 1, 2}));
  EXPECT_EQ(envy_cycle(inst, AgentOrdering::reversed(3)).bundles[0].size(), 1u);
}

TEST(EnvyCycleTest, ResolutionsShrinkTheGraphAndWorkIsBounded) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const std::size_t n = 2 + seed % 3;
    const std::size_t m = seed % 9;
    const Instance inst = gen_random(n, m, seed, 6);
    for (const auto& pi : all_orderings(n)) {
      const EnvyCycleTrace trace = envy_cycle_trace(inst, pi);
      for (const auto& res : trace.resolutions) {
        EXPECT_LT(res.edges_after, res.edges_before);
        EXPECT_GE(res.cycle.size(), 2u);
      }
      EXPECT_LE(trace.graph_operations, std::max<std::size_t>(m * n * n, m));
      EXPECT_FALSE(check_ef1(inst, trace.allocation));
      EXPECT_FALSE(validate_allocation(inst, trace.allocation));
    }
  }
}

TEST(Mech1WeightsTest, PositionalWeightFollowsGlobalIndex) {
  const Instance inst = gen_random(5, 5, 1, 9);
  const AssignmentProblem prob = mech1_weights(inst, {0, 1, 2, 3, 4});
  const Integer big = Integer(5 * 5 * 32);
  for (AgentIndex a = 0; a < 5; ++a) {
    mpz_class w2 = prob.weights[a][1] % big;
    EXPECT_EQ(w2, 8);
  }
}

TEST(Mech1WeightsTest, RankWeightsFromDistinctValues) {
  const Instance inst = make_instance({{3, 3, 2, 0, 0}});
  const AssignmentProblem prob = mech1_weights(inst, {0, 1, 2, 3, 4});
  const Integer big = Integer(1 * 5 * 32);
  const std::vector<long> w1{4, 4, 2, 1, 1};
  for (GoodIndex g = 0; g < 5; ++g) {
    const Integer w2 = Integer(1) << static_cast<mp_bitcnt_t>(4 - g);
    EXPECT_EQ(prob.weights[0][g], big * w1[g] + w2) << g;
  }
}

TEST(Mech1WeightsTest, IndifferentAgentHasUnitRankWeight) {
  const Instance inst = make_instance({{2, 2}, {1, 0}});
  const AssignmentProblem prob = mech1_weights(inst, {0, 1});
  const Integer big = Integer(2 * 2 * 4);
  EXPECT_EQ(prob.weights[0][0], big + 2);
  EXPECT_EQ(prob.weights[0][1], big + 1);
}

TEST(Mech1WeightsTest, RanksUseRemainingGoodsOnly) {
  const Instance inst = make_instance({{5, 1, 3, 3}, {0, 0, 0, 0}});
  const AssignmentProblem prob = mech1_weights(inst, {1, 3});
  const Integer big = Integer(2 * 4 * 16);
  EXPECT_EQ(prob.weights[0][0], big * 1 + 4);
  EXPECT_EQ(prob.weights[0][1], big * 2 + 1);
  EXPECT_THROW(mech1_weights(inst, {}), InputError);
}

TEST(PadWithDummiesTest, RoundsUpToMultipleOfN) {
  const Instance padded = pad_with_dummies(gen_random(3, 4, 2, 5));
  EXPECT_EQ(padded.m(), 6u);
  for (AgentIndex a = 0; a < 3; ++a) {
    EXPECT_EQ(padded.utility(a, 4), 0);
    EXPECT_EQ(padded.utility(a, 5), 0);
  }
  EXPECT_EQ(pad_with_dummies(gen_random(3, 6, 2, 5)).m(), 6u);
}

TEST(MatchingPef1Test, EqualTastesFirstPositionGetsBetterGood) {
  const Instance inst = make_instance({{2, 1}, {2, 1}});
  for (const auto& pi : {kForward, kBackward}) {
    const MatchingPef1Trace trace = matching_pef1_trace(inst, pi);
    ASSERT_EQ(trace.round_goods.size(), 1u);
    EXPECT_EQ(trace.round_goods[0], (Bundle{0, 1}));
    EXPECT_EQ(trace.allocation.bundles[pi.agent_at(0)], (Bundle{0}));
    EXPECT_EQ(trace.allocation.bundles[pi.agent_at(1)], (Bundle{1}));
  }
}

TEST(MatchingPef1Test, SingleContestedGood) {
  const Instance inst = make_instance({{5}, {5}});
  const Allocation forward = matching_pef1(inst, kForward);
  const Allocation backward = matching_pef1(inst, kBackward);
  EXPECT_EQ(forward.bundles[0].size() + forward.bundles[1].size(), 1u);
  EXPECT_EQ(backward.bundles[0].size() + backward.bundles[1].size(), 1u);
  EXPECT_EQ(pef_degree(MechanismId::kMatchingPef1, inst).degree, 1u);
}

TEST(MatchingPef1Test, SingleAgentTakesEverything) {
  const Instance inst = make_instance({{1, 0, 4}});
  EXPECT_EQ(matching_pef1(inst, AgentOrdering::identity(1)), alloc_of({{0, 1, 2}}));
}

TEST(MatchingPef1Test, RoundSetsDoNotDependOnOrdering) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t n = 2 + seed % 3;
    const Instance inst = gen_random(n, 1 + seed % 8, seed, 10);
    const auto orderings = all_orderings(n);
    const auto reference = matching_pef1_trace(inst, orderings.front()).round_goods;
    for (const auto& pi : orderings) {
      const MatchingPef1Trace trace = matching_pef1_trace(inst, pi);
      EXPECT_EQ(trace.round_goods, reference);
      EXPECT_FALSE(check_ef1(inst, trace.allocation));
      EXPECT_FALSE(validate_allocation(inst, trace.allocation));
    }
    EXPECT_LE(pef_degree(MechanismId::kMatchingPef1, inst).degree, 1u);
  }
}

TEST(PartitionGoodsTest, SignPatterns) {
  const GoodPartition p = partition_goods(make_instance({{1, 0, 2, 0}, {0, 1, 3, 0}}));
  EXPECT_EQ(p.only_first, (Bundle{0}));
  EXPECT_EQ(p.only_second, (Bundle{1}));
  EXPECT_EQ(p.shared, (Bundle{2}));
  EXPECT_EQ(p.unvalued, (Bundle{3}));

  const GoodPartition zero_first = partition_goods(make_instance({{0, 0}, {1, 0}}));
  EXPECT_TRUE(zero_first.only_first.empty());
  EXPECT_TRUE(zero_first.shared.empty());

  const GoodPartition positive = partition_goods(make_instance({{1, 2}, {3, 4}}));
  EXPECT_EQ(positive.shared, (Bundle{0, 1}));
  EXPECT_THROW(partition_goods(make_instance({{1}, {1}, {1}})), InputError);
}

TEST(EquitableSplitTest, UnequalFirstGood) {
  const Instance inst = make_instance({{3, 1}, {1, 1}});
  const FractionalSplit split = equitable_split(inst);
  EXPECT_EQ(split.split_good, 0u);
  EXPECT_EQ(split.lambda1, Rational(4, 5));
  EXPECT_EQ(split.lambda2, Rational(1, 5));
  EXPECT_TRUE(split.p1.empty());
  EXPECT_EQ(split.p2, (std::vector<GoodIndex>{1}));
  // Both agents get 3/5 of their total.
  EXPECT_EQ(split.lambda1 * 3 / 4, Rational(3, 5));
  EXPECT_EQ((split.lambda2 * 1 + 1) / 2, Rational(3, 5));
}

TEST(EquitableSplitTest, SingleSharedGoodIsHalved) {
  const FractionalSplit split = equitable_split(make_instance({{1}, {1}}));
  EXPECT_EQ(split.split_good, 0u);
  EXPECT_EQ(split.lambda1, Rational(1, 2));
  EXPECT_EQ(split.lambda2, Rational(1, 2));
}

TEST(EquitableSplitTest, BoundaryLambdaAccepted) {
  const FractionalSplit split = equitable_split(make_instance({{1, 1}, {1, 1}}));
  EXPECT_EQ(split.split_good, 0u);
  EXPECT_EQ(split.lambda1, 1);
  EXPECT_EQ(split.lambda2, 0);
}

TEST(EquitableSplitTest, EnvyFreeWithExclusiveGoods) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Instance inst = gen_random(2, 1 + seed % 7, seed, 4);
    const GoodPartition part = partition_goods(inst);
    if (part.shared.empty()) {
      EXPECT_THROW(equitable_split(inst), InputError);
      continue;
    }
    const FractionalSplit split = equitable_split(inst);
    auto share = [&](AgentIndex a, const std::vector<GoodIndex>& goods,
                     const Bundle& exclusive, const Rational& lambda) {
      Rational v = lambda * inst.utility(a, split.split_good);
      for (GoodIndex g : goods) v += inst.utility(a, g);
      for (GoodIndex g : exclusive) v += inst.utility(a, g);
      return v;
    };
    for (AgentIndex a = 0; a < 2; ++a) {
      const Rational mine = a == 0 ? share(0, split.p1, part.only_first, split.lambda1)
                                   : share(1, split.p2, part.only_second, split.lambda2);
      const Rational theirs = a == 0 ? share(0, split.p2, part.only_second, split.lambda2)
                                     : share(1, split.p1, part.only_first, split.lambda1);
      EXPECT_GE(mine, theirs) << "seed " << seed;
    }
    EXPECT_EQ(split.lambda1 + split.lambda2, 1);
  }
}

TEST(AdjustedWinnerDiscreteTest, CounterexampleForward) {
  const Instance inst = make_instance({{1, 1, 1, 1, 1}, {1, 1, 1, 1, 10}});
  const Instance aw = scale_profile(inst, {1, Rational(1, 10)});
  EXPECT_EQ(adjusted_winner_discrete(aw, kForward), alloc_of({{0, 1, 2, 3}, {4}}));
}

TEST(AdjustedWinnerDiscreteTest, CounterexampleBackward) {
  const Instance inst = make_instance({{1, 1, 1, 1, 1}, {1, 1, 1, 1, 10}});
  const Instance aw = scale_profile(inst, {1, Rational(1, 10)});
  EXPECT_EQ(adjusted_winner_discrete(aw, kBackward), alloc_of({{0, 1}, {2, 3, 4}}));
}

TEST(AdjustedWinnerTest, NoSharedGoodsKeepsExclusiveSets) {
  const Instance inst = make_instance({{2, 0, 1, 0}, {0, 3, 0, 0}});
  for (const auto& pi : {kForward, kBackward}) {
    EXPECT_EQ(adjusted_winner_discrete(inst, pi), alloc_of({{0, 2, 3}, {1}}));
    EXPECT_EQ(adjusted_winner_modified(inst, pi), alloc_of({{0, 2, 3}, {1}}));
  }
}

TEST(AdjustedWinnerModifiedTest, SplitGoodRoundsToLargerShare) {
  const Instance inst = make_instance({{3, 1}, {1, 1}});
  EXPECT_EQ(adjusted_winner_modified(inst, kForward), alloc_of({{0}, {1}}));
  EXPECT_EQ(adjusted_winner_modified(inst, kBackward), alloc_of({{0}, {1}}));
}

TEST(AdjustedWinnerTest, TwoAgentsOnly) {
  const Instance inst = make_instance({{1}, {1}, {1}});
  const AgentOrdering pi = AgentOrdering::identity(3);
  EXPECT_THROW(adjusted_winner_discrete(inst, pi), InputError);
  EXPECT_THROW(adjusted_winner_modified(inst, pi), InputError);
}

TEST(MnwBruteforceTest, Examples) {
  const Instance swap = make_instance({{2, 1}, {1, 2}});
  const Allocation best = mnw_bruteforce(swap, kForward);
  EXPECT_EQ(best, alloc_of({{0}, {1}}));
  EXPECT_EQ(nash_welfare(swap, best), 4);

  EXPECT_EQ(mnw_bruteforce(make_instance({{1}, {0}}), kBackward), alloc_of({{0}, {}}));
  EXPECT_EQ(mnw_bruteforce(make_instance({{1, 2, 3}}), AgentOrdering::identity(1)),
            alloc_of({{0, 1, 2}}));
}

TEST(MnwBruteforceTest, CapIsEnforced) {
  const Instance inst = gen_random(2, 10, 1, 5);
  EXPECT_THROW(mnw_bruteforce(inst, kForward, 1000), ResourceError);
}

TEST(MnwBruteforceTest, MatchesIndependentOptimum) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Instance inst = gen_random(2 + seed % 2, seed % 7, seed, 5);
    const Allocation alloc = mnw_bruteforce(inst, AgentOrdering::identity(inst.n()));
    const NashObjective got = nash_objective(inst, alloc);
    if (got.positive_agents == inst.n()) {
      EXPECT_EQ(got.product, testing::max_nash_welfare(inst));
    }
    testing::for_each_assignment(inst.n(), inst.m(), [&](const auto& owner) {
      EXPECT_LE(nash_objective(inst, testing::from_owner(inst.n(), owner)), got);
    });
  }
}

TEST(MechanismsTest, OutputsArePartitionsAndDeterministic) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Instance inst = gen_random(2, seed % 7, seed, 6);
    for (MechanismId id : kAllMechanisms) {
      for (const auto& pi : {kForward, kBackward}) {
        const Allocation alloc = run_mechanism(id, inst, pi);
        EXPECT_FALSE(validate_allocation(inst, alloc)) << mechanism_name(id);
        EXPECT_EQ(run_mechanism(id, inst, pi), alloc);
      }
    }
  }
}

}  // namespace
}  // namespace fairdiv
