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

#ifndef MATROIDSWAP_INSTANCE_H_
#define MATROIDSWAP_INSTANCE_H_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "matroidswap/valuation.h"

namespace matroidswap {

// Agents are addressed by dense index 1..n; index 0 is reserved for the pile
// of unallocated goods. Goods are addressed by index 0..m-1.
inline constexpr int kPile = 0;

// A fair allocation instance: goods, agents, one valuation oracle per agent
// and a priority order. Immutable after construction. Copies share oracles.
class Instance {
 public:
  using OraclePtr = std::shared_ptr<const ValuationOracle>;

  // oracles[k] belongs to agent k + 1. priority_ranks, if given, holds the
  // rank of agent k + 1 at position k, as a permutation of 1..n where rank 1
  // is the highest priority. Without it the agent list order is used.
  // Throws InstanceError on duplicate ids, an oracle over the wrong number
  // of goods, n == 0 or a rank vector that is not a permutation.
  Instance(std::vector<std::string> goods, std::vector<std::string> agents,
           std::vector<OraclePtr> oracles,
           std::optional<std::vector<int>> priority_ranks = std::nullopt);

  int num_goods() const { return static_cast<int>(goods_.size()); }
  int num_agents() const { return static_cast<int>(agents_.size()); }

  const std::string& good_name(int good) const { return goods_.at(good); }
  const std::string& agent_name(int agent) const { return agents_.at(agent - 1); }
  const std::vector<std::string>& goods() const { return goods_; }
  const std::vector<std::string>& agents() const { return agents_; }

  std::optional<int> FindGood(const std::string& name) const;
  std::optional<int> FindAgent(const std::string& name) const;

  const ValuationOracle& oracle(int agent) const { return *oracles_.at(agent - 1); }
  const OraclePtr& oracle_ptr(int agent) const { return oracles_.at(agent - 1); }

  // Rank pi(agent) in 1..n; lower is higher priority.
  int priority(int agent) const { return ranks_.at(agent - 1); }
  const std::vector<int>& priority_ranks() const { return ranks_; }
  bool has_explicit_priority() const { return explicit_priority_; }

  // Agent indices ordered from highest to lowest priority.
  std::vector<int> AgentsByPriority() const;

  Instance WithPriority(std::vector<int> ranks) const;
  Instance WithOracle(int agent, OraclePtr oracle) const;

  // Sum of oracle call counters over all agents.
  std::uint64_t TotalOracleCalls() const;

 private:
  std::vector<std::string> goods_;
  std::vector<std::string> agents_;
  std::vector<OraclePtr> oracles_;
  std::vector<int> ranks_;
  bool explicit_priority_ = false;
};

// Throws InstanceError unless ranks is a permutation of 1..n.
void ValidatePriorityRanks(const std::vector<int>& ranks, int n);

}  // namespace matroidswap

#endif  // MATROIDSWAP_INSTANCE_H_
