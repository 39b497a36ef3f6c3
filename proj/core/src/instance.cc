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

#include "matroidswap/instance.h"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "matroidswap/errors.h"

namespace matroidswap {
namespace {

void RequireUnique(const std::vector<std::string>& ids, const char* what) {
  std::unordered_set<std::string> seen;
  for (const auto& id : ids) {
    if (!seen.insert(id).second) {
      throw InstanceError(std::string("duplicate ") + what + " id '" + id + "'");
    }
  }
}

}  // namespace

void ValidatePriorityRanks(const std::vector<int>& ranks, int n) {
  if (static_cast<int>(ranks.size()) != n) {
    throw InstanceError("priority must rank every agent exactly once");
  }
  std::vector<bool> used(n + 1, false);
  for (int r : ranks) {
    if (r < 1 || r > n || used[r]) {
      throw InstanceError("priority ranks must be a permutation of 1..n");
    }
    used[r] = true;
  }
}

Instance::Instance(std::vector<std::string> goods, std::vector<std::string> agents,
                   std::vector<OraclePtr> oracles,
                   std::optional<std::vector<int>> priority_ranks)
    : goods_(std::move(goods)), agents_(std::move(agents)), oracles_(std::move(oracles)) {
  if (agents_.empty()) throw InstanceError("an instance needs at least one agent");
  RequireUnique(goods_, "good");
  RequireUnique(agents_, "agent");
  if (oracles_.size() != agents_.size()) {
    throw InstanceError("expected one valuation per agent");
  }
  for (std::size_t k = 0; k < oracles_.size(); ++k) {
    if (!oracles_[k]) throw InstanceError("missing valuation for " + agents_[k]);
    if (oracles_[k]->num_goods() != num_goods()) {
      throw InstanceError("valuation of " + agents_[k] + " is over the wrong goods");
    }
  }
  if (priority_ranks) {
    ValidatePriorityRanks(*priority_ranks, num_agents());
    ranks_ = std::move(*priority_ranks);
    explicit_priority_ = true;
  } else {
    ranks_.resize(agents_.size());
    std::iota(ranks_.begin(), ranks_.end(), 1);
  }
}

std::optional<int> Instance::FindGood(const std::string& name) const {
  auto it = std::find(goods_.begin(), goods_.end(), name);
  if (it == goods_.end()) return std::nullopt;
  return static_cast<int>(it - goods_.begin());
}

std::optional<int> Instance::FindAgent(const std::string& name) const {
  auto it = std::find(agents_.begin(), agents_.end(), name);
  if (it == agents_.end()) return std::nullopt;
  return static_cast<int>(it - agents_.begin()) + 1;
}

std::vector<int> Instance::AgentsByPriority() const {
  std::vector<int> order(num_agents());
  for (int i = 1; i <= num_agents(); ++i) order[ranks_[i - 1] - 1] = i;
  return order;
}

Instance Instance::WithPriority(std::vector<int> ranks) const {
  return Instance(goods_, agents_, oracles_, std::move(ranks));
}

Instance Instance::WithOracle(int agent, OraclePtr oracle) const {
  std::vector<OraclePtr> oracles = oracles_;
  oracles.at(agent - 1) = std::move(oracle);
  return Instance(goods_, agents_, std::move(oracles),
                  explicit_priority_ ? std::optional(ranks_) : std::nullopt);
}

std::uint64_t Instance::TotalOracleCalls() const {
  std::uint64_t total = 0;
  for (const auto& o : oracles_) total += o->calls();
  return total;
}

}  // namespace matroidswap
