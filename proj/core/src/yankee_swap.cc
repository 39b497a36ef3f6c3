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

#include "matroidswap/yankee_swap.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "matroidswap/errors.h"
#include "matroidswap/exchange.h"
#include "matroidswap/utility.h"

namespace matroidswap {

int SelectAgent(std::span<const int> active, const Allocation& alloc,
                const Instance& instance) {
  if (active.empty()) throw std::invalid_argument("no active agents");
  int best = active.front();
  for (int i : active.subspan(1)) {
    const int size_i = alloc.bundle(i).size();
    const int size_best = alloc.bundle(best).size();
    if (size_i < size_best ||
        (size_i == size_best && instance.priority(i) < instance.priority(best))) {
      best = i;
    }
  }
  return best;
}

namespace {

void CheckIteration(const Instance& instance, const Allocation& alloc,
                    const std::vector<int>& before, int agent, bool moved) {
  if (!alloc.CheckPartition()) throw InvariantError("partition invariant broken");
  if (!IsClean(alloc, instance)) throw InvariantError("allocation is no longer clean");
  const std::vector<int> after = alloc.BundleSizes();
  for (int j = 0; j <= instance.num_agents(); ++j) {
    int expected = before[j];
    if (moved && j == agent) ++expected;
    if (moved && j == kPile) --expected;
    if (after[j] != expected) {
      throw InvariantError("unexpected utility change for agent " + std::to_string(j));
    }
  }
}

}  // namespace

SolveResult YankeeSwap(const Instance& instance, const SolveOptions& options) {
  const int n = instance.num_agents();
  const int m = instance.num_goods();
  SolveResult result{EmptyAllocation(instance), {}};
  Allocation& alloc = result.allocation;
  SolveTrace& trace = result.trace;
  const std::uint64_t calls_at_start = instance.TotalOracleCalls();

  std::vector<int> active(n);
  for (int i = 1; i <= n; ++i) active[i - 1] = i;

  while (!active.empty()) {
    const std::uint64_t calls_before = instance.TotalOracleCalls();
    const int agent = SelectAgent(active, alloc, instance);
    std::vector<int> before = alloc.BundleSizes();

    const ExchangeGraph graph = BuildExchangeGraph(alloc, instance);
    ++trace.graph_builds;
    const std::optional<TransferPath> path =
        FindTransferPath(graph, alloc, instance, agent, kPile);
    if (path) {
      ApplyPath(alloc, *path);
    } else {
      active.erase(std::find(active.begin(), active.end(), agent));
      trace.removal_order.push_back(agent);
    }
    ++trace.total_iterations;
    if (trace.total_iterations > n + m) {
      throw InvariantError("Yankee Swap exceeded n + m iterations");
    }
    if (options.check_invariants) {
      CheckIteration(instance, alloc, before, agent, path.has_value());
    }
    if (options.record_iterations) {
      IterationRecord record;
      record.agent = agent;
      record.bundle_sizes_before = std::move(before);
      record.path_found = path.has_value();
      if (path) record.path = path->goods;
      record.oracle_calls = instance.TotalOracleCalls() - calls_before;
      trace.iterations.push_back(std::move(record));
    }
  }
  trace.oracle_calls = instance.TotalOracleCalls() - calls_at_start;
  return result;
}

}  // namespace matroidswap
