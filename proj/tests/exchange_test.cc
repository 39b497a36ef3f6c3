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

#include "matroidswap/exchange.h"

#include <functional>
#include <memory>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "matroidswap/errors.h"
#include "matroidswap/generators.h"
#include "testing/oracles.h"

namespace matroidswap {
namespace {

using OraclePtr = Instance::OraclePtr;

// v1 wants only g1, v2 is uniform with cap 1.
Instance RunningExample() {
  auto v1 = std::make_shared<const ValuationOracle>(2, BinaryAdditive{GoodSet::FromGoods(2, {0})});
  auto v2 = std::make_shared<const ValuationOracle>(2, Uniform{1});
  return Instance({"g1", "g2"}, {"a1", "a2"}, {v1, v2});
}

// Exchange graph straight from the edge predicate.
std::vector<std::vector<int>> PredicateGraph(const Allocation& x, const Instance& instance) {
  const int m = instance.num_goods();
  std::vector<std::vector<int>> succ(m);
  for (int g = 0; g < m; ++g) {
    const int j = x.owner(g);
    for (int h = 0; h < m; ++h) {
      if (h == g || x.bundle(j).contains(h)) continue;
      if (j == kPile) {
        succ[g].push_back(h);
        continue;
      }
      const GoodSet& bundle = x.bundle(j);
      if (instance.oracle(j).Value(bundle.Without(g).With(h)) == instance.oracle(j).Value(bundle)) {
        succ[g].push_back(h);
      }
    }
  }
  return succ;
}

// Length of the shortest simple path from F_i to the pile, by exhaustive DFS.
int ShortestByEnumeration(const std::vector<std::vector<int>>& succ, const Allocation& x,
                          const Instance& instance, int agent) {
  int best = -1;
  std::vector<bool> on_path(succ.size(), false);
  std::function<void(int, int)> walk = [&](int g, int length) {
    if (x.owner(g) == kPile) {
      if (best < 0 || length < best) best = length;
      return;
    }
    on_path[g] = true;
    for (int h : succ[g]) {
      if (!on_path[h]) walk(h, length + 1);
    }
    on_path[g] = false;
  };
  for (int g = 0; g < instance.num_goods(); ++g) {
    if (x.bundle(agent).contains(g)) continue;
    if (instance.oracle(agent).Marginal(x.bundle(agent), g) == 1) walk(g, 1);
  }
  return best;
}

TEST(GainSetTest, Examples) {
  const Instance instance = RunningExample();
  Allocation x = EmptyAllocation(instance);
  EXPECT_EQ(GainSet(x, instance, 1).ToVector(), (std::vector<int>{0}));
  EXPECT_EQ(GainSet(x, instance, 2).ToVector(), (std::vector<int>{0, 1}));
  x.Move(0, 2);
  EXPECT_TRUE(GainSet(x, instance, 2).empty());
  EXPECT_EQ(GainSet(x, instance, 1).ToVector(), (std::vector<int>{0}));
  EXPECT_EQ(GainSet(x, instance, kPile).ToVector(), (std::vector<int>{0}));
}

TEST(ExchangeGraphTest, EverythingInThePileHasNoEdges) {
  const Instance instance = testing::CardinalityInstance(2, 4);
  const ExchangeGraph graph = BuildExchangeGraph(EmptyAllocation(instance), instance);
  EXPECT_EQ(graph.num_edges(), 0u);
}

TEST(ExchangeGraphTest, RunningExample) {
  const Instance instance = RunningExample();
  Allocation x = EmptyAllocation(instance);
  x.Move(0, 2);
  const ExchangeGraph graph = BuildExchangeGraph(x, instance);
  EXPECT_EQ(graph.successors(0), (std::vector<int>{1}));
  EXPECT_EQ(graph.successors(1), (std::vector<int>{0}));
  EXPECT_EQ(graph.ToEdgeList(instance), "g1 -> g2\ng2 -> g1\n");
}

TEST(ExchangeGraphTest, UncleanAllocationIsRejected) {
  const Instance instance = RunningExample();
  Allocation x = EmptyAllocation(instance);
  x.Move(1, 1);
  EXPECT_THROW(BuildExchangeGraph(x, instance), InstanceError);
}

TEST(TransferPathTest, RunningExamplePathIsShortest) {
  const Instance instance = RunningExample();
  Allocation x = EmptyAllocation(instance);
  x.Move(0, 2);
  const auto path = FindTransferPath(x, instance, 1);
  ASSERT_TRUE(path.has_value());
  EXPECT_EQ(path->goods, (std::vector<int>{0, 1}));
  EXPECT_EQ(path->owners, (std::vector<int>{2, kPile}));
  EXPECT_EQ(path->terminal, kPile);
  EXPECT_EQ(ShortestByEnumeration(PredicateGraph(x, instance), x, instance, 1), 2);

  const Allocation y = ExecutePath(x, *path);
  EXPECT_EQ(y.bundle(1).ToVector(), (std::vector<int>{0}));
  EXPECT_EQ(y.bundle(2).ToVector(), (std::vector<int>{1}));
  EXPECT_TRUE(y.unallocated().empty());
  EXPECT_TRUE(IsClean(y, instance));
}

TEST(TransferPathTest, EmptyGainSetHasNoPath) {
  auto nothing = std::make_shared<const ValuationOracle>(2, BinaryAdditive{GoodSet(2)});
  auto any = std::make_shared<const ValuationOracle>(2, Uniform{2});
  const Instance instance({"g1", "g2"}, {"a1", "a2"}, {nothing, any});
  EXPECT_FALSE(FindTransferPath(EmptyAllocation(instance), instance, 1).has_value());
}

TEST(TransferPathTest, DirectTakeFromThePile) {
  const Instance instance = testing::CardinalityInstance(2, 2);
  Allocation x = EmptyAllocation(instance);
  x.Move(0, 2);
  const auto path = FindTransferPath(x, instance, 1);
  ASSERT_TRUE(path.has_value());
  EXPECT_EQ(path->goods, (std::vector<int>{1}));
  ApplyPath(x, *path);
  EXPECT_EQ(x.bundle(1).ToVector(), (std::vector<int>{1}));
}

TEST(TransferPathTest, NoPathWhenThePileIsEmpty) {
  const Instance instance = testing::CardinalityInstance(2, 1);
  Allocation x = EmptyAllocation(instance);
  x.Move(0, 2);
  EXPECT_FALSE(FindTransferPath(x, instance, 1).has_value());
}

TEST(ApplyPathTest, StaleOwnerIsRejectedAndLeavesAllocationUntouched) {
  const Instance instance = RunningExample();
  Allocation x = EmptyAllocation(instance);
  x.Move(0, 2);
  const auto path = FindTransferPath(x, instance, 1);
  ASSERT_TRUE(path.has_value());
  x.Move(1, 2);
  const Allocation before = x;
  EXPECT_THROW(ApplyPath(x, *path), StalePathError);
  EXPECT_EQ(x, before);
}

TEST(ApplyPathTest, RepeatedGoodIsRejected) {
  const Instance instance = testing::CardinalityInstance(2, 2);
  Allocation x = EmptyAllocation(instance);
  TransferPath path{1, kPile, {0, 0}, {kPile, kPile}};
  EXPECT_THROW(ApplyPath(x, path), StalePathError);
  EXPECT_EQ(x, EmptyAllocation(instance));
}

TEST(ExchangeFuzzTest, PathDualityDeltasAndGraphAgreement) {
  std::mt19937_64 rng(2024);
  int states = 0;
  int found = 0;
  for (; states < 500; ++states) {
    const Family family = AllFamilies()[states % AllFamilies().size()];
    const int n = 2 + states % 2;
    const int m = 3 + states % 5;
    const Instance instance = GenerateInstance(family, n, m, rng());
    const Allocation x = testing::RandomCleanAllocation(instance, rng);
    const int agent = 1 + static_cast<int>(rng() % n);

    const ExchangeGraph graph = BuildExchangeGraph(x, instance);
    const auto expected = PredicateGraph(x, instance);
    for (int g = 0; g < m; ++g) ASSERT_EQ(graph.successors(g), expected[g]);
    ASSERT_LE(graph.num_edges(), static_cast<std::size_t>(m) * (m - 1));

    const auto path = FindTransferPath(graph, x, instance, agent);
    ASSERT_EQ(path.has_value(), testing::TransferExists(instance, x, agent))
        << FamilyName(family) << " state " << states;
    if (!path) continue;
    ++found;
    ASSERT_EQ(static_cast<int>(path->goods.size()),
              ShortestByEnumeration(expected, x, instance, agent));
    ASSERT_EQ(std::set<int>(path->goods.begin(), path->goods.end()).size(), path->goods.size());

    const Allocation y = ExecutePath(x, *path);
    ASSERT_TRUE(y.CheckPartition());
    ASSERT_TRUE(IsClean(y, instance));
    const auto before = x.BundleSizes();
    const auto after = y.BundleSizes();
    for (int j = 0; j <= n; ++j) {
      const int delta = j == agent ? 1 : (j == kPile ? -1 : 0);
      ASSERT_EQ(after[j] - before[j], delta) << "agent " << j;
    }
  }
  EXPECT_GT(found, 100);
}

}  // namespace
}  // namespace matroidswap
