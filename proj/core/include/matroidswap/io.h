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

#ifndef MATROIDSWAP_IO_H_
#define MATROIDSWAP_IO_H_

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "matroidswap/allocation.h"
#include "matroidswap/bench.h"
#include "matroidswap/brute_force.h"
#include "matroidswap/fairness.h"
#include "matroidswap/instance.h"
#include "matroidswap/rpe.h"
#include "matroidswap/valuation.h"
#include "matroidswap/yankee_swap.h"

namespace matroidswap {

// Instance files:
//
//   {
//     "goods": ["g1", "g2", ...],
//     "agents": [{"id": "a1", "valuation": {"type": ..., ...}}, ...],
//     "priority": ["a2", "a1", ...]          // optional, first = rank 1
//   }
//
// Valuation objects by type:
//   binary_additive  {"desired": [good, ...]}
//   uniform          {"cap": k}
//   partition        {"parts": [{"goods": [...], "cap": k}, ...], "global_cap": k?}
//   transversal      {"adjacency": {good: [slot, ...]}, "global_cap": k?}
//   graphic          {"endpoints": {good: [u, v]}}
//   explicit         {"table": {"<mask>": value, ...}} or {"table": [v0, v1, ...]}
//
// Goods missing from a transversal adjacency have no slots; goods missing
// from graphic endpoints are loops. Explicit masks use bit k for the k-th
// good. Unknown keys are rejected. All parse errors throw InstanceError.
Instance ParseInstance(const nlohmann::json& doc);
Instance LoadInstanceFile(const std::filesystem::path& path);
nlohmann::json InstanceToJson(const Instance& instance);

nlohmann::json ReadJsonFile(const std::filesystem::path& path);

// A JSON array of agent ids, highest priority first, to rank vector.
std::vector<int> ParsePriority(const nlohmann::json& doc, const Instance& instance);
nlohmann::json PriorityToJson(const Instance& instance);

// {"allocation": {agent: [goods]}, "unallocated": [goods]}.
nlohmann::json AllocationToJson(const Allocation& alloc, const Instance& instance);
// Reads the keys written by AllocationToJson (other keys are ignored so solve
// output can be fed back in). Goods not listed anywhere go to the pile.
Allocation ParseAllocation(const nlohmann::json& doc, const Instance& instance);

nlohmann::json TraceToJson(const SolveTrace& trace, const Instance& instance);
nlohmann::json WitnessToJson(const Witness& witness, const Instance& instance);
nlohmann::json ReportToJson(const FairnessReport& report, const Instance& instance);
nlohmann::json MrfReportToJson(const MrfReport& report, const Instance& instance);
nlohmann::json OptimumToJson(const Optimum& optimum, const Instance& instance);
nlohmann::json RpeToJson(const RpeResult& result, const Instance& instance);

// {"sizes": [[n, m], ...], "families": [...], "trials": k, "seed": s}.
BenchConfig ParseBenchConfig(const nlohmann::json& doc);

}  // namespace matroidswap

#endif  // MATROIDSWAP_IO_H_
