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

#include "matroidswap/bench.h"

#include <algorithm>
#include <cmath>
#include <memory>
#include <sstream>
#include <variant>

#include <gtest/gtest.h>

#include "matroidswap/generators.h"
#include "matroidswap/io.h"
#include "matroidswap/rpe.h"
#include "testing/oracles.h"

namespace matroidswap {
namespace {

TEST(GeneratorTest, DeterministicPerSeed) {
  for (Family family : AllFamilies()) {
    const Instance a = GenerateInstance(family, 2, 3, 7);
    const Instance b = GenerateInstance(family, 2, 3, 7);
    EXPECT_EQ(InstanceToJson(a), InstanceToJson(b)) << FamilyName(family);
    EXPECT_EQ(a.priority_ranks(), b.priority_ranks());
  }
  EXPECT_NE(InstanceToJson(GenerateInstance(Family::kMixed, 3, 9, 1)),
            InstanceToJson(GenerateInstance(Family::kMixed, 3, 9, 2)));
}

TEST(GeneratorTest, EveryFamilyProducesRankFunctions) {
  for (Family family : AllFamilies()) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const Instance instance = GenerateInstance(family, 3, 20, seed);
      for (int i = 1; i <= 3; ++i) {
        EXPECT_TRUE(CheckMrf(instance.oracle(i), MrfCheckMode::Sampled(1000, seed)).valid)
            << FamilyName(family);
      }
    }
  }
}

TEST(GeneratorTest, CourseValueIsBoundedByTheGlobalCap) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Instance instance = GenerateInstance(Family::kCourse, 4, 24, seed);
    for (int i = 1; i <= 4; ++i) {
      const auto& f = std::get<Transversal>(instance.oracle(i).family());
      ASSERT_TRUE(f.global_cap.has_value());
      EXPECT_LE(instance.oracle(i).Value(GoodSet::Full(24)), *f.global_cap);
    }
  }
}

TEST(GeneratorTest, RejectsInvalidSizes) {
  EXPECT_THROW(GenerateInstance(Family::kUniform, 0, 3, 1), std::invalid_argument);
  EXPECT_THROW(GenerateInstance(Family::kUniform, 2, -1, 1), std::invalid_argument);
}

TEST(GeneratorTest, FamilyNamesRoundTrip) {
  for (Family family : AllFamilies()) EXPECT_EQ(ParseFamily(FamilyName(family)), family);
  EXPECT_FALSE(ParseFamily("matching").has_value());
}

TEST(RandomPriorityTest, IsAPermutation) {
  std::mt19937_64 rng(1);
  for (int n = 1; n <= 8; ++n) {
    std::vector<int> ranks = RandomPriority(n, rng);
    std::sort(ranks.begin(), ranks.end());
    for (int i = 0; i < n; ++i) EXPECT_EQ(ranks[i], i + 1);
  }
}

TEST(RunBenchTest, FiftyByFiftyPartition) {
  BenchConfig config;
  config.sizes = {{50, 50}};
  config.families = {Family::kPartition};
  config.trials = 5;
  config.seed = 100;
  const auto records = RunBench(config);
  ASSERT_EQ(records.size(), 5u);
  for (std::size_t t = 0; t < records.size(); ++t) {
    const BenchRecord& r = records[t];
    EXPECT_EQ(r.seed, 100 + t);
    EXPECT_LE(r.iterations, 100);
    EXPECT_EQ(r.graph_builds, r.iterations);
    EXPECT_GT(r.oracle_calls, 0u);
  }
}

TEST(RunBenchTest, NoGoodsTakesNIterations) {
  BenchConfig config;
  config.sizes = {{4, 0}, {1, 0}};
  config.families = AllFamilies();
  const auto records = RunBench(config);
  ASSERT_EQ(records.size(), 2 * AllFamilies().size());
  for (const BenchRecord& r : records) EXPECT_EQ(r.iterations, r.n);
}

TEST(RunBenchTest, CsvIsReproducibleWithoutTiming) {
  BenchConfig config;
  config.sizes = {{3, 6}, {5, 12}};
  config.families = {Family::kMixed, Family::kCourse};
  config.trials = 2;
  config.seed = 9;
  config.record_timing = false;
  std::ostringstream first;
  std::ostringstream second;
  WriteBenchCsv(first, RunBench(config));
  WriteBenchCsv(second, RunBench(config));
  const std::string csv = first.str();
  EXPECT_EQ(csv, second.str());
  EXPECT_EQ(csv.substr(0, csv.find('\n')), kBenchCsvHeader);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 9);
}

TEST(ScalingTest, RatioUsesCubicNormalisation) {
  std::vector<BenchRecord> records = {{2, 4, Family::kUniform, 0, 6, 96, 6, 0, 4},
                                      {2, 4, Family::kUniform, 1, 6, 192, 6, 0, 4},
                                      {4, 8, Family::kUniform, 0, 12, 768, 12, 0, 8}};
  const auto rows = SummarizeScaling(records);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].trials, 2);
  EXPECT_DOUBLE_EQ(rows[0].mean_oracle_calls, 144.0);
  EXPECT_DOUBLE_EQ(rows[0].ratio, 144.0 / (16.0 * 6.0));
  EXPECT_DOUBLE_EQ(rows[1].ratio, 768.0 / (64.0 * 12.0));
  const auto drift = RatioDrift(rows);
  ASSERT_EQ(drift.size(), 1u);
  EXPECT_DOUBLE_EQ(drift[0].second, 1.5);
}

TEST(RpeTest, WorkedExampleAveragesOneAndAHalf) {
  const Instance instance = testing::CardinalityInstance(2, 3);
  const RpeResult result = SimulateRpe(instance, {2000, 5});
  ASSERT_EQ(result.mean_utility.size(), 2u);
  for (int i = 0; i < 2; ++i) {
    EXPECT_GE(result.mean_utility[i], 1.4);
    EXPECT_LE(result.mean_utility[i], 1.6);
    EXPECT_LE(std::abs(result.mean_utility[i] - 1.5), 3 * result.std_error[i]);
  }
  EXPECT_DOUBLE_EQ(result.mean_utility[0] + result.mean_utility[1], 3.0);
  EXPECT_DOUBLE_EQ(result.proportionality_margins[0], result.mean_utility[0] - 1.5);
  EXPECT_TRUE(result.zeroed_agents.empty());
}

TEST(RpeTest, SingleAgentHasNoVariance) {
  auto oracle = std::make_shared<const ValuationOracle>(4, Uniform{3});
  const Instance instance({"g1", "g2", "g3", "g4"}, {"a1"}, {oracle});
  const RpeResult result = SimulateRpe(instance, {50, 1});
  EXPECT_DOUBLE_EQ(result.mean_utility[0], 3.0);
  EXPECT_DOUBLE_EQ(result.std_error[0], 0.0);
}

TEST(RpeTest, IdenticalAgentsHaveNearlyEqualMeans) {
  const Instance instance = testing::CardinalityInstance(3, 7);
  const RpeResult result = SimulateRpe(instance, {3000, 2});
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      EXPECT_NEAR(result.mean_utility[i], result.mean_utility[j], 0.1);
      EXPECT_NEAR(result.envy_margins[i][j], 0.0, 0.1);
    }
  }
}

TEST(RpeTest, InvalidValuationsAreZeroed) {
  auto bad = std::make_shared<const ValuationOracle>(2, ExplicitTable{{0, 0, 0, 1}});
  auto good = std::make_shared<const ValuationOracle>(2, Uniform{2});
  const Instance instance({"g1", "g2"}, {"a1", "a2"}, {bad, good});
  const auto [elicited, zeroed] = ZeroInvalidValuations(instance, 0);
  EXPECT_EQ(zeroed, (std::vector<int>{1}));
  EXPECT_EQ(elicited.oracle(1).Value(GoodSet::Full(2)), 0);
  const RpeResult result = SimulateRpe(instance, {100, 3});
  EXPECT_EQ(result.zeroed_agents, (std::vector<int>{1}));
  EXPECT_DOUBLE_EQ(result.mean_utility[0], 0.0);
  EXPECT_DOUBLE_EQ(result.mean_utility[1], 2.0);
}

TEST(RpeTest, NeedsAtLeastOneSample) {
  EXPECT_THROW(SimulateRpe(testing::CardinalityInstance(2, 2), {0, 1}), std::invalid_argument);
}

}  // namespace
}  // namespace matroidswap
