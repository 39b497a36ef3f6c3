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

#ifndef MATROIDSWAP_BRUTE_FORCE_H_
#define MATROIDSWAP_BRUTE_FORCE_H_

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string_view>
#include <vector>

#include "matroidswap/allocation.h"
#include "matroidswap/instance.h"
#include "matroidswap/utility.h"

namespace matroidswap {

// Size limits for exhaustive enumeration. The search space is at most
// (n + 1)^m states.
struct EnumerationGuard {
  int max_agents = 3;
  int max_goods = 8;
  std::uint64_t max_states = 50'000'000;

  static EnumerationGuard Unlimited() {
    return {std::numeric_limits<int>::max(), std::numeric_limits<int>::max(),
            std::numeric_limits<std::uint64_t>::max()};
  }
  // Limits for maximin-share computation.
  static EnumerationGuard ForMms() { return {4, 10, 50'000'000}; }

  // Throws GuardError if the instance is too large.
  void Require(const Instance& instance) const;
};

// Calls visit on every clean allocation, assigning goods in index order to
// the pile or to any agent with marginal gain 1, so only clean branches are
// explored. The allocation passed to visit is only valid during the call.
// Returns the number of allocations visited. Throws GuardError if the guard
// is exceeded, including mid-stream once max_states is passed.
std::uint64_t ForEachCleanAllocation(const Instance& instance, const EnumerationGuard& guard,
                                     const std::function<void(const Allocation&)>& visit);

enum class Objective { kMaxUsw, kMnw, kLeximinPlain, kLorenzAugmented };

std::string_view ObjectiveName(Objective objective);
std::optional<Objective> ParseObjective(std::string_view name);

struct Optimum {
  Objective objective = Objective::kMaxUsw;
  // kMaxUsw: {usw}. kMnw: {zero_count}, product in nash.
  // kLeximinPlain / kLorenzAugmented: the optimal sorted vector.
  std::vector<std::int64_t> value;
  std::optional<NashWelfare> nash;
  Allocation witness;
  std::vector<int> witness_utilities;
  std::uint64_t enumerated = 0;
};

// Exhaustive optimum over clean allocations. For kLorenzAugmented the
// leximin-maximal augmented vector is also checked to Lorenz dominate (or
// equal) every enumerated vector; InvariantError if it does not.
Optimum BruteForceOptimum(const Instance& instance, Objective objective,
                          const EnumerationGuard& guard = {});

}  // namespace matroidswap

#endif  // MATROIDSWAP_BRUTE_FORCE_H_
