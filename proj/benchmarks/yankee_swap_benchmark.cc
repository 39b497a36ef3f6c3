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

#include <benchmark/benchmark.h>

#include "matroidswap/exchange.h"
#include "matroidswap/generators.h"
#include "matroidswap/yankee_swap.h"

namespace matroidswap {
namespace {

// n = m, partition valuations. Reports oracle calls per solve as a counter.
void BM_YankeeSwapPartition(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  const Instance instance = GenerateInstance(Family::kPartition, size, size, 1);
  const SolveOptions options{.check_invariants = false, .record_iterations = false};
  std::uint64_t calls = 0;
  for (auto _ : state) {
    const SolveResult result = YankeeSwap(instance, options);
    calls = result.trace.oracle_calls;
    benchmark::DoNotOptimize(result.allocation);
  }
  state.counters["oracle_calls"] = static_cast<double>(calls);
  state.SetComplexityN(size);
}
BENCHMARK(BM_YankeeSwapPartition)
    ->RangeMultiplier(2)
    ->Range(25, 200)
    ->Unit(benchmark::kMillisecond)
    ->Complexity(benchmark::oNCubed);

void BM_YankeeSwapFamily(benchmark::State& state) {
  const Family family = AllFamilies()[state.range(0)];
  const Instance instance = GenerateInstance(family, 20, 40, 2);
  const SolveOptions options{.check_invariants = false, .record_iterations = false};
  for (auto _ : state) benchmark::DoNotOptimize(YankeeSwap(instance, options).allocation);
  state.SetLabel(std::string(FamilyName(family)));
}
BENCHMARK(BM_YankeeSwapFamily)->DenseRange(0, 6)->Unit(benchmark::kMillisecond);

void BM_BuildExchangeGraph(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  const Instance instance = GenerateInstance(Family::kMixed, size / 2, size, 3);
  const Allocation alloc =
      YankeeSwap(instance, {.check_invariants = false, .record_iterations = false}).allocation;
  for (auto _ : state) benchmark::DoNotOptimize(BuildExchangeGraph(alloc, instance));
  state.SetComplexityN(size);
}
BENCHMARK(BM_BuildExchangeGraph)->RangeMultiplier(2)->Range(16, 128)->Complexity();

}  // namespace
}  // namespace matroidswap

BENCHMARK_MAIN();
