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

#include "matroidswap/fairness.h"

#include <algorithm>
#include <limits>

#include "matroidswap/errors.h"

namespace matroidswap {
namespace {

constexpr Check kAllChecks[] = {
    Check::kClean,   Check::kEf1,     Check::kEfx,
    Check::kHalfMms, Check::kMaxUsw,  Check::kMnw,
    Check::kLeximin, Check::kLorenz,  Check::kLorenzAugmented,
};

CheckResult Pass(Check check) { return {check, true, std::nullopt}; }
CheckResult Fail(Check check, Witness witness) { return {check, false, std::move(witness)}; }

// Returns the first envy witness, EF1 flavour if up_to_any is false.
std::optional<EnvyWitness> FindEnvy(const Allocation& alloc, const Instance& instance,
                                    bool up_to_any) {
  const int n = instance.num_agents();
  for (int i = 1; i <= n; ++i) {
    const ValuationOracle& v = instance.oracle(i);
    const int own = v.Value(alloc.bundle(i));
    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;
      const GoodSet& other = alloc.bundle(j);
      const int envied = v.Value(other);
      if (own >= envied) continue;
      std::optional<EnvyWitness> witness;
      bool some_drop_ok = false;
      int last_drop_value = envied;
      other.ForEach([&](int g) {
        if (witness || some_drop_ok) return;
        const int after = v.Value(other.Without(g));
        last_drop_value = after;
        if (after > own) {
          if (up_to_any) witness = EnvyWitness{i, j, own, envied, g, after};
        } else if (!up_to_any) {
          some_drop_ok = true;
        }
      });
      if (up_to_any && witness) return witness;
      if (!up_to_any && !some_drop_ok) {
        return EnvyWitness{i, j, own, envied, std::nullopt, last_drop_value};
      }
    }
  }
  return std::nullopt;
}

bool Dominates(LorenzOrder order) {
  return order == LorenzOrder::kLeftDominates || order == LorenzOrder::kEqual;
}

}  // namespace

std::string_view CheckName(Check check) {
  switch (check) {
    case Check::kClean:
      return "clean";
    case Check::kEf1:
      return "ef1";
    case Check::kEfx:
      return "efx";
    case Check::kHalfMms:
      return "half_mms";
    case Check::kMaxUsw:
      return "max_usw";
    case Check::kMnw:
      return "mnw";
    case Check::kLeximin:
      return "leximin";
    case Check::kLorenz:
      return "lorenz";
    case Check::kLorenzAugmented:
      return "lorenz_augmented";
  }
  return "unknown";
}

std::optional<Check> ParseCheck(std::string_view name) {
  for (Check c : kAllChecks) {
    if (CheckName(c) == name) return c;
  }
  return std::nullopt;
}

std::vector<Check> AllChecks() { return {std::begin(kAllChecks), std::end(kAllChecks)}; }

bool FairnessReport::all_passed() const {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.passed; });
}

const CheckResult* FairnessReport::Find(Check check) const {
  for (const auto& r : results) {
    if (r.check == check) return &r;
  }
  return nullptr;
}

CheckResult CheckClean(const Allocation& alloc, const Instance& instance) {
  for (int i = 1; i <= instance.num_agents(); ++i) {
    const int value = instance.oracle(i).Value(alloc.bundle(i));
    const int size = alloc.bundle(i).size();
    if (value != size) return Fail(Check::kClean, CleanWitness{i, value, size});
  }
  return Pass(Check::kClean);
}

CheckResult CheckEf1(const Allocation& alloc, const Instance& instance) {
  if (auto w = FindEnvy(alloc, instance, false)) return Fail(Check::kEf1, *w);
  return Pass(Check::kEf1);
}

CheckResult CheckEfx(const Allocation& alloc, const Instance& instance) {
  if (auto w = FindEnvy(alloc, instance, true)) return Fail(Check::kEfx, *w);
  return Pass(Check::kEfx);
}

int MmsValue(const Instance& instance, int agent, const EnumerationGuard& guard) {
  guard.Require(instance);
  const int n = instance.num_agents();
  const int m = instance.num_goods();
  const ValuationOracle& v = instance.oracle(agent);
  std::vector<GoodSet> parts(n, GoodSet(m));
  int best = 0;
  std::uint64_t states = 0;

  // Restricted growth: good g joins an existing block or opens the next one,
  // which visits each set partition into at most n blocks once.
  auto descend = [&](auto&& self, int g, int used) -> void {
    if (n - used > m - g) return;  // some part stays empty, min would be 0
    if (g == m) {
      if (++states > guard.max_states) throw GuardError("MMS enumeration too large");
      int worst = std::numeric_limits<int>::max();
      for (const auto& p : parts) worst = std::min(worst, v.Value(p));
      best = std::max(best, worst);
      return;
    }
    const int limit = std::min(used + 1, n);
    for (int b = 0; b < limit; ++b) {
      parts[b].insert(g);
      self(self, g + 1, std::max(used, b + 1));
      parts[b].erase(g);
    }
  };
  descend(descend, 0, 0);
  return best;
}

CheckResult CheckCmms(const Allocation& alloc, const Instance& instance, std::int64_t c_num,
                      std::int64_t c_den, const EnumerationGuard& guard) {
  if (c_num < 0 || c_den <= 0) throw std::invalid_argument("invalid MMS fraction");
  for (int i = 1; i <= instance.num_agents(); ++i) {
    const int mms = MmsValue(instance, i, guard);
    const int value = instance.oracle(i).Value(alloc.bundle(i));
    if (value * c_den < c_num * mms) {
      return Fail(Check::kHalfMms, MmsWitness{i, mms, value, c_num, c_den});
    }
  }
  return Pass(Check::kHalfMms);
}

CheckResult CheckMaxUsw(const Allocation& alloc, const Instance& instance,
                        const EnumerationGuard& guard) {
  const Optimum best = BruteForceOptimum(instance, Objective::kMaxUsw, guard);
  const std::int64_t actual = Usw(alloc, instance);
  if (actual >= best.value[0]) return Pass(Check::kMaxUsw);
  return Fail(Check::kMaxUsw,
              ImprovementWitness{{actual}, best.value, std::nullopt, std::nullopt, best.witness});
}

CheckResult CheckMnw(const Allocation& alloc, const Instance& instance,
                     const EnumerationGuard& guard) {
  const Optimum best = BruteForceOptimum(instance, Objective::kMnw, guard);
  const NashWelfare actual = Nsw(alloc, instance);
  if (actual >= *best.nash) return Pass(Check::kMnw);
  return Fail(Check::kMnw, ImprovementWitness{{}, {}, actual, best.nash, best.witness});
}

CheckResult CheckLeximin(const Allocation& alloc, const Instance& instance,
                         const EnumerationGuard& guard) {
  const Optimum best = BruteForceOptimum(instance, Objective::kLeximinPlain, guard);
  const SortedUtilityVector actual = SortedUtilities(alloc, instance, false);
  if (LeximinCompare(actual.entries, best.value) >= 0) return Pass(Check::kLeximin);
  return Fail(Check::kLeximin, ImprovementWitness{actual.entries, best.value, std::nullopt,
                                                  std::nullopt, best.witness});
}

CheckResult CheckLorenzDominating(const Allocation& alloc, const Instance& instance,
                                  bool augmented, const EnumerationGuard& guard) {
  const Check check = augmented ? Check::kLorenzAugmented : Check::kLorenz;
  const SortedUtilityVector actual = SortedUtilities(alloc, instance, augmented);
  std::optional<ImprovementWitness> witness;
  ForEachCleanAllocation(instance, guard, [&](const Allocation& other) {
    if (witness) return;
    std::vector<int> u(instance.num_agents());
    for (int i = 1; i <= instance.num_agents(); ++i) u[i - 1] = other.bundle(i).size();
    SortedUtilityVector s = SortUtilities(u, instance.priority_ranks(), augmented);
    if (!Dominates(LorenzCompare(actual, s))) {
      witness = ImprovementWitness{actual.entries, std::move(s.entries), std::nullopt,
                                   std::nullopt, other};
    }
  });
  if (witness) return Fail(check, std::move(*witness));
  return Pass(check);
}

FairnessReport Verify(const Allocation& alloc, const Instance& instance,
                      std::span<const Check> checks, const VerifyOptions& options) {
  FairnessReport report;
  for (Check c : checks) {
    switch (c) {
      case Check::kClean:
        report.results.push_back(CheckClean(alloc, instance));
        break;
      case Check::kEf1:
        report.results.push_back(CheckEf1(alloc, instance));
        break;
      case Check::kEfx:
        report.results.push_back(CheckEfx(alloc, instance));
        break;
      case Check::kHalfMms:
        report.results.push_back(CheckCmms(alloc, instance, 1, 2, options.mms_guard));
        break;
      case Check::kMaxUsw:
        report.results.push_back(CheckMaxUsw(alloc, instance, options.guard));
        break;
      case Check::kMnw:
        report.results.push_back(CheckMnw(alloc, instance, options.guard));
        break;
      case Check::kLeximin:
        report.results.push_back(CheckLeximin(alloc, instance, options.guard));
        break;
      case Check::kLorenz:
        report.results.push_back(CheckLorenzDominating(alloc, instance, false, options.guard));
        break;
      case Check::kLorenzAugmented:
        report.results.push_back(CheckLorenzDominating(alloc, instance, true, options.guard));
        break;
    }
  }
  return report;
}

bool WitnessHolds(const CheckResult& result, const Allocation& alloc,
                  const Instance& instance, const EnumerationGuard& mms_guard) {
  if (result.passed || !result.witness) return false;
  const Witness& witness = *result.witness;

  if (const auto* w = std::get_if<CleanWitness>(&witness)) {
    const GoodSet& b = alloc.bundle(w->agent);
    const int value = instance.oracle(w->agent).Value(b);
    return value == w->value && b.size() == w->size && value != b.size();
  }

  if (const auto* w = std::get_if<EnvyWitness>(&witness)) {
    const ValuationOracle& v = instance.oracle(w->agent);
    const int own = v.Value(alloc.bundle(w->agent));
    const GoodSet& other = alloc.bundle(w->envied);
    if (own != w->own_value || own >= v.Value(other)) return false;
    if (w->good) {
      return other.contains(*w->good) && v.Value(other.Without(*w->good)) > own;
    }
    bool all_envied = true;
    other.ForEach([&](int g) { all_envied = all_envied && v.Value(other.Without(g)) > own; });
    return all_envied;
  }

  if (const auto* w = std::get_if<MmsWitness>(&witness)) {
    const int mms = MmsValue(instance, w->agent, mms_guard);
    const int value = instance.oracle(w->agent).Value(alloc.bundle(w->agent));
    return mms == w->mms && value == w->value && value * w->c_den < w->c_num * mms;
  }

  const auto& w = std::get<ImprovementWitness>(witness);
  const Allocation& better = w.better_allocation;
  if (!better.CheckPartition() || !IsClean(better, instance)) return false;
  switch (result.check) {
    case Check::kMaxUsw:
      return Usw(better, instance) > Usw(alloc, instance);
    case Check::kMnw:
      return Nsw(better, instance) > Nsw(alloc, instance);
    case Check::kLeximin:
      return LeximinCompare(SortedUtilities(better, instance, false),
                            SortedUtilities(alloc, instance, false)) > 0;
    case Check::kLorenz:
    case Check::kLorenzAugmented: {
      const bool augmented = result.check == Check::kLorenzAugmented;
      return !Dominates(LorenzCompare(SortedUtilities(alloc, instance, augmented),
                                      SortedUtilities(better, instance, augmented)));
    }
    default:
      return false;
  }
}

}  // namespace matroidswap
