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

#ifndef MATROIDSWAP_UTILITY_H_
#define MATROIDSWAP_UTILITY_H_

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "matroidswap/allocation.h"
#include "matroidswap/instance.h"

namespace matroidswap {

// The priority-perturbed utility v_i(X_i) + pi(i)/n^2, held exactly as the
// integer n^2 * v_i(X_i) + pi(i). Since 1 <= pi(i) <= n <= n^2 the integer
// order matches the rational order.
struct AugmentedUtility {
  std::int64_t scaled = 0;

  static AugmentedUtility From(int value, int rank, int num_agents) {
    const std::int64_t n = num_agents;
    return {n * n * value + rank};
  }
  friend auto operator<=>(const AugmentedUtility&, const AugmentedUtility&) = default;
};

// Utilities sorted ascending. Plain entries are v_i(X_i); augmented entries
// are AugmentedUtility::scaled.
struct SortedUtilityVector {
  std::vector<std::int64_t> entries;
  bool augmented = false;

  friend bool operator==(const SortedUtilityVector&, const SortedUtilityVector&) = default;
};

// v_i(X_i) for i = 1..n, at position i - 1.
std::vector<int> UtilityVector(const Allocation& alloc, const Instance& instance);

AugmentedUtility AugmentedValue(const Instance& instance, int agent, const GoodSet& bundle);

SortedUtilityVector SortedUtilities(const Allocation& alloc, const Instance& instance,
                                    bool augmented);
// Same, from a precomputed utility vector; ranks are pi(i) at position i - 1.
SortedUtilityVector SortUtilities(std::span<const int> utilities,
                                  std::span<const int> ranks, bool augmented);

enum class LorenzOrder { kLeftDominates, kRightDominates, kEqual, kIncomparable };
std::string_view LorenzOrderName(LorenzOrder order);

// Prefix-sum comparison of two ascending vectors. Throws std::invalid_argument
// on a length mismatch (or mixed plain/augmented for the struct overload).
LorenzOrder LorenzCompare(std::span<const std::int64_t> left,
                          std::span<const std::int64_t> right);
LorenzOrder LorenzCompare(const SortedUtilityVector& left, const SortedUtilityVector& right);

// Lexicographic comparison of two ascending vectors; greater is better.
std::strong_ordering LeximinCompare(std::span<const std::int64_t> left,
                                    std::span<const std::int64_t> right);
std::strong_ordering LeximinCompare(const SortedUtilityVector& left,
                                    const SortedUtilityVector& right);

std::int64_t Usw(const Allocation& alloc, const Instance& instance);

// Nash welfare under the zero-minimizing convention: fewer zero-utility
// agents is better, then a larger product of the positive utilities.
struct NashWelfare {
  int zero_count = 0;
  boost::multiprecision::cpp_int product = 1;

  static NashWelfare FromUtilities(std::span<const int> utilities);

  // Greater is better.
  friend std::strong_ordering operator<=>(const NashWelfare& a, const NashWelfare& b);
  friend bool operator==(const NashWelfare& a, const NashWelfare& b) {
    return a.zero_count == b.zero_count && a.product == b.product;
  }
};

NashWelfare Nsw(const Allocation& alloc, const Instance& instance);

}  // namespace matroidswap

#endif  // MATROIDSWAP_UTILITY_H_
