// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "matroidswap/brute_force.h"

#include <memory>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "matroidswap/errors.h"
#include "matroidswap/generators.h"
#include "matroidswap/utility.h"
#include "testing/oracles.h"

namespace matroidswap {
namespace {

using testing::CardinalityInstance;

std::uint64_t Count(const Instance& instance) {
  return ForEachCleanAllocation(instance, {}, [](const Allocation&) {});
}

TEST(EnumerationTest, SmallCounts) {
  EXPECT_EQ(Count(CardinalityInstance(1, 1)), 2u);
  EXPECT_EQ(Count(CardinalityInstance(2, 1)), 3u);
  EXPECT_EQ(Count(CardinalityInstance(2, 0)), 1u);
  EXPECT_EQ(Count(CardinalityInstance(2, 3)), 27u);
}

TEST(EnumerationTest, MatchesNaiveFilterOfAllAssignments) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const Family family = AllFamilies()[trial % AllFamilies().size()];
    const int n = 1 + trial % 3;
    const int m = trial % 7;
    const Instance instance = GenerateInstance(family, n, m, rng());
    std::set<std::vector<int>> expected;
    for (const Allocation& a : testing::NaiveCleanAllocations(instance)) {
      expected.insert(a.owners());
    }
    std::set<std::vector<int>> seen;
    const std::uint64_t count = ForEachCleanAllocation(instance, {}, [&](const Allocation& a) {
      EXPECT_TRUE(a.CheckPartition());
      seen.insert(a.owners());
    });
    ASSERT_EQ(count, expected.size()) << FamilyName(family);
    ASSERT_EQ(seen, expected);
  }
}

TEST(EnumerationTest, GuardIsEnforced) {
  EXPECT_THROW(Count(CardinalityInstance(4, 2)), GuardError);
  EXPECT_THROW(Count(CardinalityInstance(2, 9)), GuardError);
  EXPECT_THROW(ForEachCleanAllocation(CardinalityInstance(2, 6), {3, 8, 10},
                                      [](const Allocation&) {}),
               GuardError);
  EXPECT_EQ(ForEachCleanAllocation(CardinalityInstance(4, 2), EnumerationGuard::Unlimited(),
                                   [](const Allocation&) {}),
            25u);
}

TEST(OptimumTest, WorkedExample) {
  const Instance instance = CardinalityInstance(2, 3, {1, 2});
  EXPECT_EQ(BruteForceOptimum(instance, Objective::kMaxUsw).value,
            (std::vector<std::int64_t>{3}));
  const Optimum lorenz = BruteForceOptimum(instance, Objective::kLorenzAugmented);
  EXPECT_EQ(lorenz.witness_utilities, (std::vector<int>{2, 1}));
  EXPECT_EQ(lorenz.value, (std::vector<std::int64_t>{6, 9}));
  EXPECT_EQ(BruteForceOptimum(instance, Objective::kLeximinPlain).value,
            (std::vector<std::int64_t>{1, 2}));
  const Optimum mnw = BruteForceOptimum(instance, Objective::kMnw);
  EXPECT_EQ(mnw.nash->zero_count, 0);
  EXPECT_EQ(mnw.nash->product, 2);
}

TEST(OptimumTest, NoGoodsGivesZeroVectors) {
  const Instance instance = CardinalityInstance(3, 0);
  EXPECT_EQ(BruteForceOptimum(instance, Objective::kMaxUsw).value,
            (std::vector<std::int64_t>{0}));
  EXPECT_EQ(BruteForceOptimum(instance, Objective::kLeximinPlain).value,
            (std::vector<std::int64_t>(3, 0)));
  EXPECT_EQ(BruteForceOptimum(instance, Objective::kLorenzAugmented).witness_utilities,
            (std::vector<int>(3, 0)));
  EXPECT_EQ(BruteForceOptimum(instance, Objective::kMnw).nash->zero_count, 3);
}

TEST(OptimumTest, ObjectiveNamesRoundTrip) {
  for (Objective o : {Objective::kMaxUsw, Objective::kMnw, Objective::kLeximinPlain,
                      Objective::kLorenzAugmented}) {
    EXPECT_EQ(ParseObjective(ObjectiveName(o)), o);
  }
  EXPECT_FALSE(ParseObjective("lorenz").has_value());
}

TEST(OptimumTest, WitnessesAreCleanAndAchieveTheValue) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const Family family = AllFamilies()[trial % AllFamilies().size()];
    const int n = 2 + trial % 2;
    const int m = 2 + trial % 5;
    const Instance instance = GenerateInstance(family, n, m, rng());
    const Optimum usw = BruteForceOptimum(instance, Objective::kMaxUsw);
    ASSERT_TRUE(IsClean(usw.witness, instance));
    ASSERT_EQ(Usw(usw.witness, instance), usw.value[0]);

    const Optimum mnw = BruteForceOptimum(instance, Objective::kMnw);
    ASSERT_TRUE(IsClean(mnw.witness, instance));
    ASSERT_EQ(Nsw(mnw.witness, instance), *mnw.nash);

    const Optimum lex = BruteForceOptimum(instance, Objective::kLeximinPlain);
    ASSERT_EQ(testing::PlainSorted(instance, lex.witness), lex.value);

    const Optimum lorenz = BruteForceOptimum(instance, Objective::kLorenzAugmented);
    ASSERT_TRUE(IsClean(lorenz.witness, instance));
    ASSERT_EQ(testing::AugmentedSorted(instance, lorenz.witness), lorenz.value);
    // Restricted to plain utilities, the augmented optimum is leximin-optimal.
    ASSERT_EQ(testing::PlainSorted(instance, lorenz.witness), lex.value);
    ASSERT_EQ(UtilityVector(lorenz.witness, instance), lorenz.witness_utilities);
  }
}

TEST(OptimumTest, AugmentedOptimumIsUniqueAsAVector) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const Family family = AllFamilies()[trial % AllFamilies().size()];
    const Instance instance = GenerateInstance(family, 3, 2 + trial % 5, rng());
    const Optimum lorenz = BruteForceOptimum(instance, Objective::kLorenzAugmented);
    int matches = 0;
    bool all_distinct = true;
    for (const Allocation& a : testing::NaiveCleanAllocations(instance)) {
      const auto v = testing::AugmentedSorted(instance, a);
      if (v == lorenz.value) ++matches;
      all_distinct = all_distinct && std::set<std::int64_t>(v.begin(), v.end()).size() == v.size();
      ASSERT_TRUE(testing::PrefixDominates(lorenz.value, v));
    }
    EXPECT_TRUE(all_distinct);
    EXPECT_GE(matches, 1);
  }
}

TEST(OptimumTest, RedundantAllocationsNeverDoBetter) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 30; ++trial) {
    const Family family = AllFamilies()[trial % AllFamilies().size()];
    const Instance instance = GenerateInstance(family, 2, 2 + trial % 4, rng());
    const Optimum lorenz = BruteForceOptimum(instance, Objective::kLorenzAugmented);
    const Optimum usw = BruteForceOptimum(instance, Objective::kMaxUsw);
    testing::ForEachAssignment(instance, [&](const Allocation& a) {
      const auto v = testing::AugmentedSorted(instance, a);
      ASSERT_TRUE(testing::PrefixDominates(lorenz.value, v));
      std::int64_t total = 0;
      for (std::int64_t x : testing::PlainSorted(instance, a)) total += x;
      ASSERT_LE(total, usw.value[0]);
    });
  }
}

}  // namespace
}  // namespace matroidswap
