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

#include "matroidswap/allocation.h"

#include "matroidswap/errors.h"

namespace matroidswap {

Allocation::Allocation(int num_agents, int num_goods)
    : bundles_(num_agents + 1, GoodSet(num_goods)), owner_(num_goods, kPile) {
  bundles_[kPile] = GoodSet::Full(num_goods);
}

std::vector<int> Allocation::BundleSizes() const {
  std::vector<int> sizes;
  sizes.reserve(bundles_.size());
  for (const auto& b : bundles_) sizes.push_back(b.size());
  return sizes;
}

void Allocation::Move(int good, int to_agent) {
  if (good < 0 || good >= num_goods()) throw std::out_of_range("good out of range");
  if (to_agent < 0 || to_agent > num_agents()) {
    throw std::out_of_range("agent out of range");
  }
  bundles_[owner_[good]].erase(good);
  bundles_[to_agent].insert(good);
  owner_[good] = to_agent;
}

bool Allocation::CheckPartition() const {
  GoodSet seen(num_goods());
  int total = 0;
  for (int agent = 0; agent <= num_agents(); ++agent) {
    const GoodSet& b = bundles_[agent];
    if (b.universe() != num_goods()) return false;
    if (seen.CountIntersection(b) != 0) return false;
    seen |= b;
    total += b.size();
    bool consistent = true;
    b.ForEach([&](int g) { consistent = consistent && owner_[g] == agent; });
    if (!consistent) return false;
  }
  return total == num_goods();
}

Allocation EmptyAllocation(const Instance& instance) {
  return Allocation(instance.num_agents(), instance.num_goods());
}

Allocation AllocationFromOwners(const Instance& instance, const std::vector<int>& owners) {
  if (static_cast<int>(owners.size()) != instance.num_goods()) {
    throw InstanceError("owner map must cover every good");
  }
  Allocation alloc = EmptyAllocation(instance);
  for (int g = 0; g < instance.num_goods(); ++g) {
    if (owners[g] < 0 || owners[g] > instance.num_agents()) {
      throw InstanceError("owner index out of range");
    }
    alloc.Move(g, owners[g]);
  }
  return alloc;
}

bool IsClean(const Allocation& alloc, const Instance& instance) {
  for (int i = 1; i <= instance.num_agents(); ++i) {
    const GoodSet& b = alloc.bundle(i);
    if (instance.oracle(i).Value(b) != b.size()) return false;
  }
  return true;
}

}  // namespace matroidswap
