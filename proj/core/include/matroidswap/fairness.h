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

#ifndef MATROIDSWAP_FAIRNESS_H_
#define MATROIDSWAP_FAIRNESS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "matroidswap/allocation.h"
#include "matroidswap/brute_force.h"
#include "matroidswap/instance.h"
#include "matroidswap/utility.h"

namespace matroidswap {

enum class Check {
  kClean,
  kEf1,
  kEfx,
  kHalfMms,
  kMaxUsw,
  kMnw,
  kLeximin,
  kLorenz,
  kLorenzAugmented,
};

std::string_view CheckName(Check check);
std::optional<Check> ParseCheck(std::string_view name);
std::vector<Check> AllChecks();

// Agent holds a bundle worth less than its size.
struct CleanWitness {
  int agent = 0;
  int value = 0;
  int size = 0;
};

// agent envies envied. For EFX, good is a single good whose removal leaves
// the envy in place; for EF1 no good is set and every removal leaves envy.
struct EnvyWitness {
  int agent = 0;
  int envied = 0;
  int own_value = 0;
  int envied_value = 0;
  std::optional<int> good;
  int value_without_good = 0;
};

// value * c_den < c_num * mms.
struct MmsWitness {
  int agent = 0;
  int mms = 0;
  int value = 0;
  std::int64_t c_num = 1;
  std::int64_t c_den = 2;
};

// A clean allocation that beats (or is not dominated by) the one checked.
// Vectors hold {usw} for kMaxUsw, sorted utilities for the vector checks;
// kMnw fills the nash fields instead.
struct ImprovementWitness {
  std::vector<std::int64_t> actual;
  std::vector<std::int64_t> better;
  std::optional<NashWelfare> actual_nash;
  std::optional<NashWelfare> better_nash;
  Allocation better_allocation;
};

using Witness = std::variant<CleanWitness, EnvyWitness, MmsWitness, ImprovementWitness>;

struct CheckResult {
  Check check;
  bool passed = true;
  std::optional<Witness> witness;
};

struct FairnessReport {
  std::vector<CheckResult> results;

  bool all_passed() const;
  const CheckResult* Find(Check check) const;
};

struct VerifyOptions {
  EnumerationGuard guard;
  EnumerationGuard mms_guard = EnumerationGuard::ForMms();
};

CheckResult CheckClean(const Allocation& alloc, const Instance& instance);
CheckResult CheckEf1(const Allocation& alloc, const Instance& instance);
CheckResult CheckEfx(const Allocation& alloc, const Instance& instance);

// max over n-partitions of the goods of the least valued part, for agent.
// Enumerates set partitions into at most n blocks.
int MmsValue(const Instance& instance, int agent,
             const EnumerationGuard& guard = EnumerationGuard::ForMms());

// v_i(X_i) >= (c_num / c_den) * MMS_i for every agent, compared exactly.
CheckResult CheckCmms(const Allocation& alloc, const Instance& instance, std::int64_t c_num,
                      std::int64_t c_den,
                      const EnumerationGuard& guard = EnumerationGuard::ForMms());

// These compare against every clean allocation of the instance.
CheckResult CheckMaxUsw(const Allocation& alloc, const Instance& instance,
                        const EnumerationGuard& guard = {});
CheckResult CheckMnw(const Allocation& alloc, const Instance& instance,
                     const EnumerationGuard& guard = {});
CheckResult CheckLeximin(const Allocation& alloc, const Instance& instance,
                         const EnumerationGuard& guard = {});
// Passes iff alloc Lorenz dominates or equals every clean allocation, on
// plain or priority-augmented utilities.
CheckResult CheckLorenzDominating(const Allocation& alloc, const Instance& instance,
                                  bool augmented, const EnumerationGuard& guard = {});

FairnessReport Verify(const Allocation& alloc, const Instance& instance,
                      std::span<const Check> checks, const VerifyOptions& options = {});

// Re-evaluates a failing result's witness against alloc. True iff the
// witness really shows the property is violated.
bool WitnessHolds(const CheckResult& result, const Allocation& alloc,
                  const Instance& instance,
                  const EnumerationGuard& mms_guard = EnumerationGuard::ForMms());

}  // namespace matroidswap

#endif  // MATROIDSWAP_FAIRNESS_H_
