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

#include "matroidswap/exchange.h"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <sstream>

#include "matroidswap/errors.h"

namespace matroidswap {

GoodSet GainSet(const Allocation& alloc, const Instance& instance, int agent) {
  const int m = instance.num_goods();
  if (agent == kPile) return GoodSet::Full(m) - alloc.unallocated();
  const GoodSet& bundle = alloc.bundle(agent);
  const ValuationOracle& oracle = instance.oracle(agent);
  const int base = oracle.Value(bundle);
  GoodSet gains(m);
  GoodSet scratch = bundle;
  for (int g = 0; g < m; ++g) {
    if (bundle.contains(g)) continue;
    scratch.insert(g);
    if (oracle.Value(scratch) - base == 1) gains.insert(g);
    scratch.erase(g);
  }
  return gains;
}

ExchangeGraph::ExchangeGraph(std::vector<std::vector<int>> successors,
                             std::vector<int> owners)
    : successors_(std::move(successors)), owners_(std::move(owners)) {}

std::size_t ExchangeGraph::num_edges() const {
  std::size_t total = 0;
  for (const auto& s : successors_) total += s.size();
  return total;
}

std::string ExchangeGraph::ToEdgeList(const Instance& instance) const {
  std::ostringstream out;
  for (int g = 0; g < num_goods(); ++g) {
    for (int h : successors_[g]) {
      out << instance.good_name(g) << " -> " << instance.good_name(h) << '\n';
    }
  }
  return out.str();
}

ExchangeGraph BuildExchangeGraph(const Allocation& alloc, const Instance& instance) {
  if (!IsClean(alloc, instance)) {
    throw InstanceError("exchange graph requires a clean allocation");
  }
  const int m = instance.num_goods();
  std::vector<std::vector<int>> successors(m);
  for (int g = 0; g < m; ++g) {
    const int j = alloc.owner(g);
    const GoodSet& bundle = alloc.bundle(j);
    if (j == kPile) {
      for (int h = 0; h < m; ++h) {
        if (!bundle.contains(h)) successors[g].push_back(h);
      }
      continue;
    }
    // Clean, so v_j(X_j) = |X_j|.
    const int base = bundle.size();
    const ValuationOracle& oracle = instance.oracle(j);
    GoodSet scratch = bundle.Without(g);
    for (int h = 0; h < m; ++h) {
      if (bundle.contains(h)) continue;
      scratch.insert(h);
      if (oracle.Value(scratch) == base) successors[g].push_back(h);
      scratch.erase(h);
    }
  }
  return ExchangeGraph(std::move(successors), alloc.owners());
}

std::optional<TransferPath> FindTransferPath(const ExchangeGraph& graph,
                                             const Allocation& alloc,
                                             const Instance& instance, int initiator,
                                             int target) {
  if (initiator == target) throw std::invalid_argument("initiator equals target");
  const int m = instance.num_goods();
  const GoodSet& goal = alloc.bundle(target);
  constexpr int kSource = -1;
  constexpr int kUnseen = -2;
  std::vector<int> parent(m, kUnseen);
  std::deque<int> queue;

  auto finish = [&](int last) {
    TransferPath path;
    path.initiator = initiator;
    path.terminal = target;
    for (int g = last; g != kSource; g = parent[g]) path.goods.push_back(g);
    std::reverse(path.goods.begin(), path.goods.end());
    for (int g : path.goods) path.owners.push_back(alloc.owner(g));
    return path;
  };

  const GoodSet seeds = GainSet(alloc, instance, initiator);
  std::optional<int> found;
  seeds.ForEach([&](int g) {
    if (found) return;
    parent[g] = kSource;
    if (goal.contains(g)) {
      found = g;
      return;
    }
    queue.push_back(g);
  });
  if (found) return finish(*found);

  while (!queue.empty()) {
    const int g = queue.front();
    queue.pop_front();
    for (int h : graph.successors(g)) {
      if (parent[h] != kUnseen) continue;
      parent[h] = g;
      if (goal.contains(h)) return finish(h);
      queue.push_back(h);
    }
  }
  return std::nullopt;
}

std::optional<TransferPath> FindTransferPath(const Allocation& alloc,
                                             const Instance& instance, int initiator,
                                             int target) {
  return FindTransferPath(BuildExchangeGraph(alloc, instance), alloc, instance,
                          initiator, target);
}

void ApplyPath(Allocation& alloc, const TransferPath& path) {
  if (path.goods.empty() || path.goods.size() != path.owners.size()) {
    throw StalePathError("malformed transfer path");
  }
  GoodSet seen(alloc.num_goods());
  for (std::size_t k = 0; k < path.goods.size(); ++k) {
    const int g = path.goods[k];
    if (g < 0 || g >= alloc.num_goods()) throw StalePathError("unknown good on path");
    if (seen.contains(g)) throw StalePathError("transfer path repeats a good");
    seen.insert(g);
    if (alloc.owner(g) != path.owners[k]) {
      throw StalePathError("good on transfer path changed owner since the search");
    }
  }
  if (path.owners.back() != path.terminal) {
    throw StalePathError("transfer path does not end at its terminal agent");
  }
  for (std::size_t k = path.goods.size() - 1; k > 0; --k) {
    alloc.Move(path.goods[k], path.owners[k - 1]);
  }
  alloc.Move(path.goods.front(), path.initiator);
}

Allocation ExecutePath(Allocation alloc, const TransferPath& path) {
  ApplyPath(alloc, path);
  return alloc;
}

}  // namespace matroidswap
