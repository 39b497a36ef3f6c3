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

#ifndef MATROIDSWAP_YANKEE_SWAP_H_
#define MATROIDSWAP_YANKEE_SWAP_H_

#include <cstdint>
#include <span>
#include <vector>

#include "matroidswap/allocation.h"
#include "matroidswap/instance.h"

namespace matroidswap {

struct IterationRecord {
  int agent = 0;
  // |X_0|, |X_1|, ..., |X_n| at the start of the iteration.
  std::vector<int> bundle_sizes_before;
  bool path_found = false;
  std::vector<int> path;
  std::uint64_t oracle_calls = 0;
};

struct SolveTrace {
  std::vector<IterationRecord> iterations;
  int total_iterations = 0;
  int graph_builds = 0;
  std::uint64_t oracle_calls = 0;
  // Agents in the order they left the active set.
  std::vector<int> removal_order;
};

struct SolveOptions {
#ifdef NDEBUG
  bool check_invariants = false;
#else
  bool check_invariants = true;
#endif
  bool record_iterations = true;
};

struct SolveResult {
  Allocation allocation;
  SolveTrace trace;
};

// The active agent with the fewest goods, ties broken toward higher
// priority (lower rank). On a clean allocation this is the active agent
// with least augmented utility. Throws std::invalid_argument if active is
// empty.
int SelectAgent(std::span<const int> active, const Allocation& alloc,
                const Instance& instance);

// Yankee Swap. Starting from the empty allocation, repeatedly lets the
// selected agent take a useful good along a shortest transfer path ending at
// the pile, or retires the agent when no such path exists. The result is a
// clean allocation that is Lorenz dominating for the instance's priority
// order. Deterministic for a fixed instance.
//
// With check_invariants set, cleanness, the partition invariant and the
// utility deltas are verified after every iteration (InvariantError on
// failure).
SolveResult YankeeSwap(const Instance& instance, const SolveOptions& options = {});

}  // namespace matroidswap

#endif  // MATROIDSWAP_YANKEE_SWAP_H_
