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

#include "matroidswap/rpe.h"

#include <cmath>
#include <memory>
#include <random>
#include <stdexcept>

#include "matroidswap/generators.h"
#include "matroidswap/valuation.h"
#include "matroidswap/yankee_swap.h"

namespace matroidswap {

std::pair<Instance, std::vector<int>> ZeroInvalidValuations(const Instance& instance,
                                                            std::uint64_t seed) {
  Instance elicited = instance;
  std::vector<int> zeroed;
  const int m = instance.num_goods();
  const MrfCheckMode mode =
      m <= 12 ? MrfCheckMode::Exhaustive() : MrfCheckMode::Sampled(1000, seed);
  for (int i = 1; i <= instance.num_agents(); ++i) {
    if (CheckMrf(instance.oracle(i), mode).valid) continue;
    elicited = elicited.WithOracle(i, std::make_shared<const ValuationOracle>(m, Uniform{0}));
    zeroed.push_back(i);
  }
  return {std::move(elicited), std::move(zeroed)};
}

RpeResult SimulateRpe(const Instance& instance, const RpeOptions& options) {
  if (options.samples < 1) throw std::invalid_argument("RPE needs at least one sample");
  auto [elicited, zeroed] = ZeroInvalidValuations(instance, options.seed);
  const int n = elicited.num_agents();

  std::mt19937_64 rng(options.seed);
  std::vector<double> sum(n, 0.0);
  std::vector<double> sum_sq(n, 0.0);
  std::vector<std::vector<double>> cross(n, std::vector<double>(n, 0.0));

  SolveOptions solve_options;
  solve_options.check_invariants = false;
  solve_options.record_iterations = false;
  for (int s = 0; s < options.samples; ++s) {
    const Instance drawn = elicited.WithPriority(RandomPriority(n, rng));
    const SolveResult result = YankeeSwap(drawn, solve_options);
    for (int i = 1; i <= n; ++i) {
      const ValuationOracle& v = drawn.oracle(i);
      for (int j = 1; j <= n; ++j) {
        const double value = v.Value(result.allocation.bundle(j));
        cross[i - 1][j - 1] += value;
        if (i == j) {
          sum[i - 1] += value;
          sum_sq[i - 1] += value * value;
        }
      }
    }
  }

  RpeResult out;
  out.samples = options.samples;
  out.zeroed_agents = std::move(zeroed);
  const double k = options.samples;
  for (int i = 0; i < n; ++i) {
    const double mean = sum[i] / k;
    out.mean_utility.push_back(mean);
    const double var = k > 1 ? std::max(0.0, (sum_sq[i] - k * mean * mean) / (k - 1)) : 0.0;
    out.std_error.push_back(std::sqrt(var / k));
    std::vector<double> row(n);
    std::vector<double> margins(n);
    for (int j = 0; j < n; ++j) {
      row[j] = cross[i][j] / k;
      margins[j] = mean - row[j];
    }
    out.envy_matrix.push_back(std::move(row));
    out.envy_margins.push_back(std::move(margins));
    const double whole = elicited.oracle(i + 1).Value(GoodSet::Full(elicited.num_goods()));
    out.proportionality_margins.push_back(mean - whole / n);
  }
  return out;
}

}  // namespace matroidswap
