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

#ifndef MATROIDSWAP_ALLOCATION_H_
#define MATROIDSWAP_ALLOCATION_H_

#include <vector>

#include "matroidswap/good_set.h"
#include "matroidswap/instance.h"

namespace matroidswap {

// A partition (X_0, X_1, ..., X_n) of the goods, where X_0 is the pile of
// unallocated goods. The owner map and the bundles are kept consistent by
// every mutating method.
class Allocation {
 public:
  // Every good starts in the pile.
  Allocation(int num_agents, int num_goods);

  int num_agents() const { return static_cast<int>(bundles_.size()) - 1; }
  int num_goods() const { return static_cast<int>(owner_.size()); }

  const GoodSet& bundle(int agent) const { return bundles_.at(agent); }
  const GoodSet& unallocated() const { return bundles_[kPile]; }
  int owner(int good) const { return owner_.at(good); }
  const std::vector<int>& owners() const { return owner_; }
  std::vector<int> BundleSizes() const;

  void Move(int good, int to_agent);

  // Bundles pairwise disjoint, union is every good, owner map consistent.
  bool CheckPartition() const;

  friend bool operator==(const Allocation&, const Allocation&) = default;

 private:
  std::vector<GoodSet> bundles_;
  std::vector<int> owner_;
};

// (G, ∅, ..., ∅).
Allocation EmptyAllocation(const Instance& instance);

// Builds an allocation from an owner map (owner[g] in 0..n).
Allocation AllocationFromOwners(const Instance& instance, const std::vector<int>& owners);

// True iff v_i(X_i) = |X_i| for every agent i in 1..n.
bool IsClean(const Allocation& alloc, const Instance& instance);

}  // namespace matroidswap

#endif  // MATROIDSWAP_ALLOCATION_H_
