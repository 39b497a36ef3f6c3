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

#include "matroidswap/valuation.h"

#include <algorithm>
#include <memory>
#include <numeric>
#include <random>
#include <thread>

#include <gtest/gtest.h>

#include "matroidswap/errors.h"
#include "matroidswap/generators.h"
#include "matroidswap/utility.h"
#include "testing/oracles.h"

namespace matroidswap {
namespace {

GoodSet Goods(int m, std::vector<int> members) { return GoodSet::FromGoods(m, members); }

TEST(ValueTest, UniformCapsAtK) {
  const ValuationOracle v(5, Uniform{2});
  EXPECT_EQ(v.Value(GoodSet::Full(5)), 2);
  EXPECT_EQ(v.Value(Goods(5, {3})), 1);
}

TEST(ValueTest, PartitionSumsCappedParts) {
  Partition f;
  f.parts = {{Goods(3, {0, 1}), 1}, {Goods(3, {2}), 1}};
  const ValuationOracle v(3, f);
  const GoodSet all = GoodSet::Full(3);
  EXPECT_EQ(v.Value(all), 2);
  // Cross-check against an explicit table built from the definition.
  ExplicitTable table;
  for (std::uint64_t mask = 0; mask < 8; ++mask) {
    table.table.push_back(testing::RankByDefinition(v, GoodSet::FromMask(3, mask)));
  }
  const ValuationOracle explicit_v(3, table);
  for (std::uint64_t mask = 0; mask < 8; ++mask) {
    EXPECT_EQ(v.Value(GoodSet::FromMask(3, mask)), explicit_v.Value(GoodSet::FromMask(3, mask)));
  }
}

TEST(ValueTest, PartitionGlobalCap) {
  Partition f;
  f.parts = {{Goods(4, {0, 1}), 2}, {Goods(4, {2, 3}), 2}};
  f.global_cap = 3;
  const ValuationOracle v(4, f);
  EXPECT_EQ(v.Value(GoodSet::Full(4)), 3);
}

TEST(ValueTest, TransversalSingleSlot) {
  Transversal f;
  f.num_slots = 1;
  f.slots_of_good = {{0}, {0}};
  const ValuationOracle v(2, f);
  EXPECT_EQ(v.Value(GoodSet::Full(2)), 1);
  EXPECT_EQ(testing::RankByDefinition(v, GoodSet::Full(2)), 1);
}

TEST(ValueTest, TransversalNeedsAugmentingPath) {
  // Greedy in index order would match g0 to slot 0 and strand g1.
  Transversal f;
  f.num_slots = 2;
  f.slots_of_good = {{0, 1}, {0}};
  const ValuationOracle v(2, f);
  EXPECT_EQ(v.Value(GoodSet::Full(2)), 2);
}

TEST(ValueTest, GraphicCountsForestEdges) {
  Graphic f;
  f.num_vertices = 3;
  f.endpoints = {{0, 1}, {1, 2}, {0, 2}, {1, 1}};
  const ValuationOracle v(4, f);
  EXPECT_EQ(v.Value(GoodSet::Full(4)), 2);
  EXPECT_EQ(v.Value(Goods(4, {3})), 0);
}

TEST(ValueTest, ErrorsOnForeignSetsAndMissingEntries) {
  const ValuationOracle v(3, Uniform{1});
  EXPECT_THROW(v.Value(GoodSet(4)), OracleError);
  ExplicitTable t;
  t.table = {0, 1, -1, 1};
  const ValuationOracle e(2, t);
  EXPECT_EQ(e.Value(Goods(2, {0})), 1);
  EXPECT_THROW(e.Value(Goods(2, {1})), OracleError);
}

TEST(ValueTest, RejectsMalformedConfigurations) {
  Partition overlap;
  overlap.parts = {{Goods(3, {0, 1}), 1}, {Goods(3, {1, 2}), 1}};
  EXPECT_THROW(ValuationOracle(3, overlap), OracleError);
  EXPECT_THROW(ValuationOracle(3, Uniform{-1}), OracleError);
  EXPECT_THROW(ValuationOracle(2, ExplicitTable{{0, 1, 1}}), OracleError);
  EXPECT_THROW(ValuationOracle(17, ExplicitTable{}), OracleError);
  Transversal bad;
  bad.num_slots = 1;
  bad.slots_of_good = {{1}};
  EXPECT_THROW(ValuationOracle(1, bad), OracleError);
}

TEST(MarginalTest, Examples) {
  const ValuationOracle uniform(2, Uniform{1});
  EXPECT_EQ(uniform.Marginal(Goods(2, {0}), 1), 0);
  const ValuationOracle additive(2, BinaryAdditive{Goods(2, {0})});
  EXPECT_EQ(additive.Marginal(GoodSet(2), 0), 1);
  EXPECT_EQ(additive.Marginal(GoodSet(2), 1), 0);
  Graphic triangle;
  triangle.num_vertices = 3;
  triangle.endpoints = {{0, 1}, {1, 2}, {2, 0}};
  const ValuationOracle graphic(3, triangle);
  EXPECT_EQ(graphic.Marginal(Goods(3, {0, 1}), 2), 0);
  EXPECT_EQ(graphic.Marginal(Goods(3, {0}), 2), 1);
}

TEST(MarginalTest, GoodAlreadyHeldIsAnError) {
  const ValuationOracle v(2, Uniform{2});
  EXPECT_THROW(v.Marginal(Goods(2, {0}), 0), OracleError);
  EXPECT_THROW(v.Marginal(GoodSet(2), 2), OracleError);
}

TEST(CheckMrfTest, UniformIsValidExhaustively) {
  const ValuationOracle v(5, Uniform{3});
  const MrfReport report = CheckMrf(v, MrfCheckMode::Exhaustive());
  EXPECT_TRUE(report.valid);
  EXPECT_FALSE(report.violation.has_value());
  EXPECT_GT(report.checks, 0u);
}

TEST(CheckMrfTest, GainOfTwoIsInvalid) {
  // v({g1}) = 0, v({g1, g2}) = 2.
  const ValuationOracle v(2, ExplicitTable{{0, 0, 1, 2}});
  const MrfReport report = CheckMrf(v, MrfCheckMode::Exhaustive());
  ASSERT_FALSE(report.valid);
  EXPECT_EQ(report.violation->kind, MrfViolation::Kind::kNonBinaryGain);
  EXPECT_EQ(report.violation->gain_smaller, 2);
}

TEST(CheckMrfTest, NonzeroEmptyValueIsInvalid) {
  const ValuationOracle v(1, ExplicitTable{{1, 1}});
  const MrfReport report = CheckMrf(v, MrfCheckMode::Sampled(10, 1));
  ASSERT_FALSE(report.valid);
  EXPECT_EQ(report.violation->kind, MrfViolation::Kind::kNonzeroEmpty);
}

TEST(CheckMrfTest, SupermodularTableIsNotSubmodular) {
  // Each good alone is worthless, together they are worth 1.
  const ValuationOracle v(2, ExplicitTable{{0, 0, 0, 1}});
  const MrfReport report = CheckMrf(v, MrfCheckMode::Exhaustive());
  ASSERT_FALSE(report.valid);
  const MrfViolation& w = *report.violation;
  EXPECT_EQ(w.kind, MrfViolation::Kind::kNotSubmodular);
  EXPECT_TRUE(w.smaller.IsSubsetOf(w.larger));
  EXPECT_FALSE(w.larger.contains(w.good));
  EXPECT_LT(v.Marginal(w.smaller, w.good), v.Marginal(w.larger, w.good));

  const MrfReport sampled = CheckMrf(v, MrfCheckMode::Sampled(2000, 4));
  EXPECT_FALSE(sampled.valid);
}

TEST(CheckMrfTest, ExhaustiveModeIsGuarded) {
  const ValuationOracle v(17, Uniform{3});
  EXPECT_THROW(CheckMrf(v, MrfCheckMode::Exhaustive()), GuardError);
  EXPECT_TRUE(CheckMrf(v, MrfCheckMode::Sampled(200, 3)).valid);
}

TEST(CheckMrfTest, BuiltInFamiliesPassSampledChecks) {
  std::mt19937_64 rng(99);
  for (int config = 0; config < 100; ++config) {
    const Family family = AllFamilies()[config % AllFamilies().size()];
    const int m = std::uniform_int_distribution<int>(1, 24)(rng);
    const Instance instance = GenerateInstance(family, 2, m, rng());
    for (int i = 1; i <= 2; ++i) {
      const MrfReport report = CheckMrf(instance.oracle(i), MrfCheckMode::Sampled(1000, config));
      ASSERT_TRUE(report.valid) << FamilyName(family) << " m=" << m;
    }
  }
}

// value() agrees with a definition-level rank on every subset.
TEST(DifferentialTest, FamiliesMatchDefinitionOnAllSubsets) {
  for (Family family : {Family::kAdditive, Family::kUniform, Family::kPartition,
                        Family::kTransversal, Family::kGraphic, Family::kCourse}) {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      const int m = 5 + static_cast<int>(seed);
      const Instance instance = GenerateInstance(family, 2, m, seed * 31 + 7);
      for (int i = 1; i <= 2; ++i) {
        const ValuationOracle& v = instance.oracle(i);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
          const GoodSet s = GoodSet::FromMask(m, mask);
          ASSERT_EQ(v.Value(s), testing::RankByDefinition(v, s))
              << FamilyName(family) << " seed=" << seed << " mask=" << mask;
        }
        const ValuationOracle tabulated(m, Tabulate(v));
        EXPECT_TRUE(CheckMrf(tabulated, MrfCheckMode::Exhaustive()).valid);
      }
    }
  }
}

TEST(DifferentialTest, MonotoneAlongRandomChains) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const Family family = AllFamilies()[trial % AllFamilies().size()];
    const int m = 12;
    const Instance instance = GenerateInstance(family, 1, m, rng());
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    GoodSet chain(m);
    int previous = instance.oracle(1).Value(chain);
    for (int g : order) {
      chain.insert(g);
      const int value = instance.oracle(1).Value(chain);
      ASSERT_GE(value, previous);
      ASSERT_LE(value, previous + 1);
      previous = value;
    }
  }
}

TEST(CallCounterTest, StrictlyIncreasesPerValueCall) {
  const ValuationOracle v(3, Uniform{2});
  std::uint64_t last = v.calls();
  for (int k = 0; k < 10; ++k) {
    v.Value(GoodSet(3));
    EXPECT_EQ(v.calls(), last + 1);
    last = v.calls();
  }
  v.Marginal(GoodSet(3), 0);
  EXPECT_EQ(v.calls(), last + 2);
}

TEST(CallCounterTest, ConcurrentEvaluationCountsEveryCall) {
  const ValuationOracle v(8, Uniform{3});
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&] {
      for (int k = 0; k < 1000; ++k) v.Value(GoodSet::Full(8));
    });
  }
  for (auto& t : threads) t.join();
  EXPECT_EQ(v.calls(), 4000u);
}

TEST(AugmentedValueTest, ScalesByNSquaredPlusRank) {
  auto o = std::make_shared<const ValuationOracle>(2, Uniform{2});
  const Instance instance({"g1", "g2"}, {"a1", "a2"}, {o, o}, std::vector<int>{1, 2});
  EXPECT_EQ(AugmentedValue(instance, 2, GoodSet::FromGoods(2, {0})).scaled, 6);
  EXPECT_EQ(AugmentedValue(instance, 1, GoodSet::Full(2)).scaled, 9);
  const Instance three({"g1", "g2"}, {"a1", "a2", "a3"}, {o, o, o});
  EXPECT_EQ(AugmentedValue(three, 1, GoodSet(2)).scaled, 1);
}

}  // namespace
}  // namespace matroidswap
