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

#include "matroidswap/utility.h"

#include <algorithm>
#include <stdexcept>

namespace matroidswap {

std::vector<int> UtilityVector(const Allocation& alloc, const Instance& instance) {
  std::vector<int> out(instance.num_agents());
  for (int i = 1; i <= instance.num_agents(); ++i) {
    out[i - 1] = instance.oracle(i).Value(alloc.bundle(i));
  }
  return out;
}

AugmentedUtility AugmentedValue(const Instance& instance, int agent, const GoodSet& bundle) {
  return AugmentedUtility::From(instance.oracle(agent).Value(bundle),
                                instance.priority(agent), instance.num_agents());
}

SortedUtilityVector SortUtilities(std::span<const int> utilities,
                                  std::span<const int> ranks, bool augmented) {
  if (augmented && ranks.size() != utilities.size()) {
    throw std::invalid_argument("rank vector length mismatch");
  }
  SortedUtilityVector out;
  out.augmented = augmented;
  out.entries.reserve(utilities.size());
  const int n = static_cast<int>(utilities.size());
  for (std::size_t k = 0; k < utilities.size(); ++k) {
    out.entries.push_back(augmented
                              ? AugmentedUtility::From(utilities[k], ranks[k], n).scaled
                              : utilities[k]);
  }
  std::stable_sort(out.entries.begin(), out.entries.end());
  return out;
}

SortedUtilityVector SortedUtilities(const Allocation& alloc, const Instance& instance,
                                    bool augmented) {
  const std::vector<int> u = UtilityVector(alloc, instance);
  return SortUtilities(u, instance.priority_ranks(), augmented);
}

std::string_view LorenzOrderName(LorenzOrder order) {
  switch (order) {
    case LorenzOrder::kLeftDominates:
      return "left_dominates";
    case LorenzOrder::kRightDominates:
      return "right_dominates";
    case LorenzOrder::kEqual:
      return "equal";
    case LorenzOrder::kIncomparable:
      return "incomparable";
  }
  return "unknown";
}

LorenzOrder LorenzCompare(std::span<const std::int64_t> left,
                          std::span<const std::int64_t> right) {
  if (left.size() != right.size()) {
    throw std::invalid_argument("Lorenz comparison of vectors of different length");
  }
  std::int64_t sum_left = 0;
  std::int64_t sum_right = 0;
  bool left_ahead = false;
  bool right_ahead = false;
  for (std::size_t k = 0; k < left.size(); ++k) {
    sum_left += left[k];
    sum_right += right[k];
    if (sum_left > sum_right) left_ahead = true;
    if (sum_right > sum_left) right_ahead = true;
  }
  if (left_ahead && right_ahead) return LorenzOrder::kIncomparable;
  if (left_ahead) return LorenzOrder::kLeftDominates;
  if (right_ahead) return LorenzOrder::kRightDominates;
  // Equal prefix sums force equal entries.
  return LorenzOrder::kEqual;
}

LorenzOrder LorenzCompare(const SortedUtilityVector& left, const SortedUtilityVector& right) {
  if (left.augmented != right.augmented) {
    throw std::invalid_argument("cannot compare plain and augmented vectors");
  }
  return LorenzCompare(left.entries, right.entries);
}

std::strong_ordering LeximinCompare(std::span<const std::int64_t> left,
                                    std::span<const std::int64_t> right) {
  if (left.size() != right.size()) {
    throw std::invalid_argument("leximin comparison of vectors of different length");
  }
  return std::lexicographical_compare_three_way(left.begin(), left.end(), right.begin(),
                                                right.end());
}

std::strong_ordering LeximinCompare(const SortedUtilityVector& left,
                                    const SortedUtilityVector& right) {
  if (left.augmented != right.augmented) {
    throw std::invalid_argument("cannot compare plain and augmented vectors");
  }
  return LeximinCompare(left.entries, right.entries);
}

std::int64_t Usw(const Allocation& alloc, const Instance& instance) {
  std::int64_t total = 0;
  for (int v : UtilityVector(alloc, instance)) total += v;
  return total;
}

NashWelfare NashWelfare::FromUtilities(std::span<const int> utilities) {
  NashWelfare out;
  for (int v : utilities) {
    if (v == 0) {
      ++out.zero_count;
    } else {
      out.product *= v;
    }
  }
  return out;
}

std::strong_ordering operator<=>(const NashWelfare& a, const NashWelfare& b) {
  if (a.zero_count != b.zero_count) return b.zero_count <=> a.zero_count;
  if (a.product < b.product) return std::strong_ordering::less;
  if (a.product > b.product) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

NashWelfare Nsw(const Allocation& alloc, const Instance& instance) {
  const std::vector<int> u = UtilityVector(alloc, instance);
  return NashWelfare::FromUtilities(u);
}

}  // namespace matroidswap
