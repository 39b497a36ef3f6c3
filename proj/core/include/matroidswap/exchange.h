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

#ifndef MATROIDSWAP_EXCHANGE_H_
#define MATROIDSWAP_EXCHANGE_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "matroidswap/allocation.h"
#include "matroidswap/good_set.h"
#include "matroidswap/instance.h"

namespace matroidswap {

// F_i(X): the goods outside X_i with marginal gain 1 for agent i. For the
// pile (agent 0, additive) this is every good not in X_0.
GoodSet GainSet(const Allocation& alloc, const Instance& instance, int agent);

// Directed graph on goods. There is an edge g -> g' iff g' is not in the
// bundle X_j holding g and v_j(X_j - g + g') = v_j(X_j), i.e. the owner of g
// can swap it for g' without losing value. Pile-owned goods point to every
// good outside the pile. Successor lists are in ascending good order.
class ExchangeGraph {
 public:
  ExchangeGraph(std::vector<std::vector<int>> successors, std::vector<int> owners);

  int num_goods() const { return static_cast<int>(successors_.size()); }
  const std::vector<int>& successors(int good) const { return successors_.at(good); }
  int owner(int good) const { return owners_.at(good); }
  std::size_t num_edges() const;

  // One "g -> g'" line per edge, using good names.
  std::string ToEdgeList(const Instance& instance) const;

  friend bool operator==(const ExchangeGraph&, const ExchangeGraph&) = default;

 private:
  std::vector<std::vector<int>> successors_;
  std::vector<int> owners_;
};

// Tests every ordered pair of goods: O(m^2) oracle calls. Throws
// InstanceError if alloc is not clean.
ExchangeGraph BuildExchangeGraph(const Allocation& alloc, const Instance& instance);

// A chain of transfers: goods[0] goes to the initiator, goods[k] goes to the
// holder of goods[k - 1], and the terminal holder of goods.back() loses one
// good. owners records who held each good when the path was found.
struct TransferPath {
  int initiator = 0;
  int terminal = kPile;
  std::vector<int> goods;
  std::vector<int> owners;

  friend bool operator==(const TransferPath&, const TransferPath&) = default;
};

// Breadth-first search from a virtual source wired to F_initiator(X) for the
// nearest good in X_target. Sources and successors are explored in ascending
// good order, so the returned shortest path is deterministic. Returns
// nullopt iff no such path exists in the exchange graph.
std::optional<TransferPath> FindTransferPath(const ExchangeGraph& graph,
                                             const Allocation& alloc,
                                             const Instance& instance, int initiator,
                                             int target = kPile);

// Convenience overload that builds the exchange graph first.
std::optional<TransferPath> FindTransferPath(const Allocation& alloc,
                                             const Instance& instance, int initiator,
                                             int target = kPile);

// Performs the transfers in place. Throws StalePathError if any good on the
// path is no longer held by the owner recorded at search time, or if the
// path repeats a good; alloc is left untouched in that case.
void ApplyPath(Allocation& alloc, const TransferPath& path);

Allocation ExecutePath(Allocation alloc, const TransferPath& path);

}  // namespace matroidswap

#endif  // MATROIDSWAP_EXCHANGE_H_
