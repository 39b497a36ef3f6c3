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

#include <string>

#include "matroidswap/errors.h"

namespace matroidswap {

void EnumerationGuard::Require(const Instance& instance) const {
  if (instance.num_agents() > max_agents || instance.num_goods() > max_goods) {
    throw GuardError("instance with n=" + std::to_string(instance.num_agents()) +
                     ", m=" + std::to_string(instance.num_goods()) +
                     " exceeds enumeration guard (n<=" + std::to_string(max_agents) +
                     ", m<=" + std::to_string(max_goods) + ")");
  }
}

namespace {

class CleanEnumerator {
 public:
  CleanEnumerator(const Instance& instance, const EnumerationGuard& guard,
                  const std::function<void(const Allocation&)>& visit)
      : instance_(instance),
        guard_(guard),
        visit_(visit),
        alloc_(EmptyAllocation(instance)) {}

  std::uint64_t Run() {
    Descend(0);
    return count_;
  }

 private:
  // Goods before next are placed; alloc_ is clean on those goods.
  void Descend(int next) {
    if (next == instance_.num_goods()) {
      if (++count_ > guard_.max_states) {
        throw GuardError("enumeration exceeded " + std::to_string(guard_.max_states) +
                         " states");
      }
      visit_(alloc_);
      return;
    }
    Descend(next + 1);
    for (int i = 1; i <= instance_.num_agents(); ++i) {
      if (instance_.oracle(i).Marginal(alloc_.bundle(i), next) != 1) continue;
      alloc_.Move(next, i);
      Descend(next + 1);
      alloc_.Move(next, kPile);
    }
  }

  const Instance& instance_;
  const EnumerationGuard& guard_;
  const std::function<void(const Allocation&)>& visit_;
  Allocation alloc_;
  std::uint64_t count_ = 0;
};

}  // namespace

std::uint64_t ForEachCleanAllocation(const Instance& instance, const EnumerationGuard& guard,
                                     const std::function<void(const Allocation&)>& visit) {
  guard.Require(instance);
  return CleanEnumerator(instance, guard, visit).Run();
}

std::string_view ObjectiveName(Objective objective) {
  switch (objective) {
    case Objective::kMaxUsw:
      return "max_usw";
    case Objective::kMnw:
      return "mnw";
    case Objective::kLeximinPlain:
      return "leximin_plain";
    case Objective::kLorenzAugmented:
      return "lorenz_augmented";
  }
  return "unknown";
}

std::optional<Objective> ParseObjective(std::string_view name) {
  for (Objective o : {Objective::kMaxUsw, Objective::kMnw, Objective::kLeximinPlain,
                      Objective::kLorenzAugmented}) {
    if (ObjectiveName(o) == name) return o;
  }
  return std::nullopt;
}

Optimum BruteForceOptimum(const Instance& instance, Objective objective,
                          const EnumerationGuard& guard) {
  const int n = instance.num_agents();
  Optimum best{objective, {}, std::nullopt, EmptyAllocation(instance), {}, 0};
  bool have = false;
  // Clean, so bundle sizes are utilities.
  auto utilities_of = [n](const Allocation& a) {
    std::vector<int> u(n);
    for (int i = 1; i <= n; ++i) u[i - 1] = a.bundle(i).size();
    return u;
  };
  auto take = [&](const Allocation& a, std::vector<int> u) {
    best.witness = a;
    best.witness_utilities = std::move(u);
    have = true;
  };

  best.enumerated = ForEachCleanAllocation(instance, guard, [&](const Allocation& a) {
    std::vector<int> u = utilities_of(a);
    switch (objective) {
      case Objective::kMaxUsw: {
        std::int64_t total = 0;
        for (int v : u) total += v;
        if (!have || total > best.value[0]) {
          best.value = {total};
          take(a, std::move(u));
        }
        break;
      }
      case Objective::kMnw: {
        NashWelfare w = NashWelfare::FromUtilities(u);
        if (!have || w > *best.nash) {
          best.value = {w.zero_count};
          best.nash = std::move(w);
          take(a, std::move(u));
        }
        break;
      }
      case Objective::kLeximinPlain:
      case Objective::kLorenzAugmented: {
        const bool augmented = objective == Objective::kLorenzAugmented;
        SortedUtilityVector s = SortUtilities(u, instance.priority_ranks(), augmented);
        if (!have || LeximinCompare(s.entries, best.value) > 0) {
          best.value = std::move(s.entries);
          take(a, std::move(u));
        }
        break;
      }
    }
  });

  if (objective == Objective::kLorenzAugmented) {
    ForEachCleanAllocation(instance, guard, [&](const Allocation& a) {
      const std::vector<int> u = utilities_of(a);
      const SortedUtilityVector s = SortUtilities(u, instance.priority_ranks(), true);
      const LorenzOrder order = LorenzCompare(best.value, s.entries);
      if (order != LorenzOrder::kLeftDominates && order != LorenzOrder::kEqual) {
        throw InvariantError(
            "leximin-optimal augmented vector fails to Lorenz dominate a clean allocation");
      }
    });
  }
  return best;
}

}  // namespace matroidswap
