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

#include "matroidswap/bench.h"

#include <algorithm>
#include <chrono>
#include <map>
#include <ostream>
#include <string>
#include <tuple>

#include "matroidswap/allocation.h"
#include "matroidswap/brute_force.h"
#include "matroidswap/errors.h"
#include "matroidswap/utility.h"
#include "matroidswap/yankee_swap.h"

namespace matroidswap {

std::vector<BenchRecord> RunBench(const BenchConfig& config) {
  std::vector<BenchRecord> records;
  const EnumerationGuard guard;
  for (const auto& [n, m] : config.sizes) {
    for (Family family : config.families) {
      for (int trial = 0; trial < config.trials; ++trial) {
        const std::uint64_t seed = config.seed + static_cast<std::uint64_t>(trial);
        const Instance instance = GenerateInstance(family, n, m, seed);
        SolveOptions options;
        options.check_invariants = false;
        options.record_iterations = false;

        const auto start = std::chrono::steady_clock::now();
        SolveResult result = YankeeSwap(instance, options);
        const auto stop = std::chrono::steady_clock::now();

        const SolveTrace& trace = result.trace;
        if (trace.total_iterations > n + m) {
          throw InvariantError("bench solve exceeded n + m iterations");
        }
        if (!IsClean(result.allocation, instance)) {
          throw InvariantError("bench solve returned an unclean allocation");
        }
        if (config.verify_small && trial == 0 && n <= guard.max_agents &&
            m <= guard.max_goods) {
          const Optimum best =
              BruteForceOptimum(instance, Objective::kLorenzAugmented, guard);
          if (SortedUtilities(result.allocation, instance, true).entries != best.value) {
            throw InvariantError("bench solve disagrees with brute force");
          }
        }

        BenchRecord r;
        r.n = n;
        r.m = m;
        r.family = family;
        r.seed = seed;
        r.iterations = trace.total_iterations;
        r.oracle_calls = trace.oracle_calls;
        r.graph_builds = trace.graph_builds;
        r.wall_time_ns =
            config.record_timing
                ? std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count()
                : 0;
        r.usw = Usw(result.allocation, instance);
        records.push_back(r);
      }
    }
  }
  return records;
}

void WriteBenchCsv(std::ostream& out, std::span<const BenchRecord> records) {
  out << kBenchCsvHeader << '\n';
  for (const auto& r : records) {
    out << r.n << ',' << r.m << ',' << FamilyName(r.family) << ',' << r.seed << ','
        << r.iterations << ',' << r.oracle_calls << ',' << r.graph_builds << ','
        << r.wall_time_ns << ',' << r.usw << '\n';
  }
}

std::vector<ScalingRow> SummarizeScaling(std::span<const BenchRecord> records) {
  std::vector<ScalingRow> rows;
  auto find_row = [&](const BenchRecord& r) -> ScalingRow& {
    for (auto& row : rows) {
      if (row.n == r.n && row.m == r.m && row.family == r.family) return row;
    }
    rows.push_back({r.n, r.m, r.family, 0, 0, 0, 0});
    return rows.back();
  };
  for (const auto& r : records) {
    ScalingRow& row = find_row(r);
    ++row.trials;
    row.mean_iterations += r.iterations;
    row.mean_oracle_calls += static_cast<double>(r.oracle_calls);
  }
  for (auto& row : rows) {
    row.mean_iterations /= row.trials;
    row.mean_oracle_calls /= row.trials;
    const double m = row.m;
    const double bound = m * m * (m + row.n);
    row.ratio = bound > 0 ? row.mean_oracle_calls / bound : 0.0;
  }
  return rows;
}

std::vector<std::pair<Family, double>> RatioDrift(std::span<const ScalingRow> rows) {
  std::map<Family, std::pair<double, double>> range;
  std::map<Family, int> count;
  for (const auto& row : rows) {
    if (row.ratio <= 0) continue;
    auto [it, inserted] = range.try_emplace(row.family, row.ratio, row.ratio);
    if (!inserted) {
      it->second.first = std::min(it->second.first, row.ratio);
      it->second.second = std::max(it->second.second, row.ratio);
    }
    ++count[row.family];
  }
  std::vector<std::pair<Family, double>> out;
  for (const auto& [family, lo_hi] : range) {
    if (count[family] < 2) continue;
    out.emplace_back(family, lo_hi.second / lo_hi.first);
  }
  return out;
}

}  // namespace matroidswap
