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

#ifndef MATROIDSWAP_RPE_H_
#define MATROIDSWAP_RPE_H_

#include <cstdint>
#include <utility>
#include <vector>

#include "matroidswap/instance.h"

namespace matroidswap {

struct RpeOptions {
  int samples = 1000;
  std::uint64_t seed = 0;
};

// Monte Carlo estimate of the randomized prioritized egalitarian mechanism.
// Vectors are indexed by agent - 1.
struct RpeResult {
  int samples = 0;
  std::vector<double> mean_utility;
  std::vector<double> std_error;
  // envy_matrix[i][j] = mean of v_i(X_j).
  std::vector<std::vector<double>> envy_matrix;
  // mean v_i(X_i) - mean v_i(X_j); nonnegative means ex-ante envy-free.
  std::vector<std::vector<double>> envy_margins;
  // mean v_i(X_i) - v_i(G) / n.
  std::vector<double> proportionality_margins;
  // Agents whose valuation failed the MRF check and was replaced by zero.
  std::vector<int> zeroed_agents;
};

// Replaces every agent valuation that fails CheckMrf (exhaustive when
// m <= 12, otherwise 1000 sampled triples) with the all-zero valuation.
// Returns the elicited instance and the zeroed agents.
std::pair<Instance, std::vector<int>> ZeroInvalidValuations(const Instance& instance,
                                                            std::uint64_t seed);

// Draws a uniformly random priority order per sample (seeded), solves with
// Yankee Swap and averages. Throws std::invalid_argument if samples < 1.
RpeResult SimulateRpe(const Instance& instance, const RpeOptions& options);

}  // namespace matroidswap

#endif  // MATROIDSWAP_RPE_H_
