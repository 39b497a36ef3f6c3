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

#ifndef MATROIDSWAP_BENCH_H_
#define MATROIDSWAP_BENCH_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "matroidswap/generators.h"

namespace matroidswap {

struct BenchConfig {
  std::vector<std::pair<int, int>> sizes;  // (n, m)
  std::vector<Family> families;
  int trials = 1;
  std::uint64_t seed = 0;
  // When false, wall_time_ns is reported as 0 so output is reproducible.
  bool record_timing = true;
  // Cross-check the first trial of every guarded size against brute force.
  bool verify_small = true;
};

struct BenchRecord {
  int n = 0;
  int m = 0;
  Family family = Family::kAdditive;
  std::uint64_t seed = 0;
  int iterations = 0;
  std::uint64_t oracle_calls = 0;
  int graph_builds = 0;
  std::int64_t wall_time_ns = 0;
  std::int64_t usw = 0;
};

// Solves every (size, family, trial) combination with trial seed
// config.seed + trial. Throws InvariantError if a solve breaks the n + m
// iteration bound, returns an unclean allocation, or (when verified)
// disagrees with brute force.
std::vector<BenchRecord> RunBench(const BenchConfig& config);

inline constexpr const char* kBenchCsvHeader =
    "n,m,family,seed,iterations,oracle_calls,graph_builds,wall_time_ns,usw";

void WriteBenchCsv(std::ostream& out, std::span<const BenchRecord> records);

// Mean oracle calls per (n, m, family) normalised by m^2 (m + n).
struct ScalingRow {
  int n = 0;
  int m = 0;
  Family family = Family::kAdditive;
  int trials = 0;
  double mean_iterations = 0;
  double mean_oracle_calls = 0;
  double ratio = 0;
};

std::vector<ScalingRow> SummarizeScaling(std::span<const BenchRecord> records);

// max ratio / min ratio across sizes, per family (families with one size or
// zero ratios are skipped).
std::vector<std::pair<Family, double>> RatioDrift(std::span<const ScalingRow> rows);

}  // namespace matroidswap

#endif  // MATROIDSWAP_BENCH_H_
