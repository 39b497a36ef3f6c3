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

// Command-line front end: solve, verify, oracle, bench, rpe, check-oracle.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "matroidswap/bench.h"
#include "matroidswap/brute_force.h"
#include "matroidswap/errors.h"
#include "matroidswap/exchange.h"
#include "matroidswap/fairness.h"
#include "matroidswap/generators.h"
#include "matroidswap/io.h"
#include "matroidswap/rpe.h"
#include "matroidswap/utility.h"
#include "matroidswap/valuation.h"
#include "matroidswap/yankee_swap.h"

namespace {

using nlohmann::json;
using namespace matroidswap;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitNotMrf = 3;

// Set MATROIDSWAP_GUARD_OVERRIDE to lift brute-force size limits. Large
// instances may then take a very long time.
bool GuardOverridden() {
  const char* v = std::getenv("MATROIDSWAP_GUARD_OVERRIDE");
  return v != nullptr && *v != '\0' && std::string(v) != "0";
}

EnumerationGuard Guard() {
  return GuardOverridden() ? EnumerationGuard::Unlimited() : EnumerationGuard{};
}

EnumerationGuard MmsGuard() {
  return GuardOverridden() ? EnumerationGuard::Unlimited() : EnumerationGuard::ForMms();
}

void Emit(const json& doc) { std::cout << doc.dump(2) << '\n'; }

MrfCheckMode DefaultMrfMode(const Instance& instance) {
  return instance.num_goods() <= kMaxExplicitGoods ? MrfCheckMode::Exhaustive()
                                                   : MrfCheckMode::Sampled(1000, 0);
}

std::vector<std::string> SplitCommas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

struct SolveArgs {
  std::string instance_path;
  std::string priority_file;
  std::optional<std::uint64_t> seed_priority;
  bool trace = false;
  bool check_oracles = false;
  std::string dump_graph;
};

int RunSolve(const SolveArgs& args) {
  Instance instance = LoadInstanceFile(args.instance_path);
  if (args.check_oracles) {
    json failures = json::object();
    for (int i = 1; i <= instance.num_agents(); ++i) {
      const MrfReport report = CheckMrf(instance.oracle(i), DefaultMrfMode(instance));
      if (!report.valid) failures[instance.agent_name(i)] = MrfReportToJson(report, instance);
    }
    if (!failures.empty()) {
      std::cerr << "valuation is not a matroid rank function:\n" << failures.dump(2) << '\n';
      return kExitNotMrf;
    }
  }

  std::string source = instance.has_explicit_priority() ? "instance" : "default_identity";
  if (!args.priority_file.empty()) {
    instance = instance.WithPriority(ParsePriority(ReadJsonFile(args.priority_file), instance));
    source = "file";
  } else if (args.seed_priority) {
    std::mt19937_64 rng(*args.seed_priority);
    instance = instance.WithPriority(RandomPriority(instance.num_agents(), rng));
    source = "seed";
  }

  const SolveResult result = YankeeSwap(instance);
  json out = AllocationToJson(result.allocation, instance);
  json utilities = json::object();
  const std::vector<int> u = UtilityVector(result.allocation, instance);
  for (int i = 1; i <= instance.num_agents(); ++i) utilities[instance.agent_name(i)] = u[i - 1];
  out["utilities"] = std::move(utilities);
  out["augmented_priority_used"] = PriorityToJson(instance);
  out["priority_source"] = source;
  if (args.trace) out["trace"] = TraceToJson(result.trace, instance);

  if (!args.dump_graph.empty()) {
    std::ofstream dump(args.dump_graph);
    if (!dump) throw InstanceError("cannot write " + args.dump_graph);
    dump << BuildExchangeGraph(result.allocation, instance).ToEdgeList(instance);
  }
  Emit(out);
  return kExitOk;
}

int RunVerify(const std::string& instance_path, const std::string& allocation_path,
              const std::optional<std::string>& checks_arg) {
  Instance instance = LoadInstanceFile(instance_path);
  const json alloc_doc = ReadJsonFile(allocation_path);
  if (auto it = alloc_doc.find("augmented_priority_used");
      alloc_doc.is_object() && it != alloc_doc.end()) {
    instance = instance.WithPriority(ParsePriority(*it, instance));
  }
  const Allocation alloc = ParseAllocation(alloc_doc, instance);

  std::vector<Check> checks;
  if (!checks_arg) {
    checks = AllChecks();
  } else {
    for (const auto& name : SplitCommas(*checks_arg)) {
      const std::optional<Check> c = ParseCheck(name);
      if (!c) throw InstanceError("unknown check '" + name + "'");
      checks.push_back(*c);
    }
    if (checks.empty()) throw InstanceError("--checks lists no checks");
  }
  VerifyOptions options;
  options.guard = Guard();
  options.mms_guard = MmsGuard();
  const FairnessReport report = Verify(alloc, instance, checks, options);
  Emit(ReportToJson(report, instance));
  return report.all_passed() ? kExitOk : kExitCheckFailed;
}

int RunOracle(const std::string& instance_path, const std::string& objective_name) {
  const Instance instance = LoadInstanceFile(instance_path);
  const std::optional<Objective> objective = ParseObjective(objective_name);
  if (!objective) throw InstanceError("unknown objective '" + objective_name + "'");
  Emit(OptimumToJson(BruteForceOptimum(instance, *objective, Guard()), instance));
  return kExitOk;
}

struct BenchArgs {
  std::string config_path;
  std::string sizes;
  std::string families;
  std::optional<int> trials;
  std::optional<std::uint64_t> seed;
  std::string out_path;
  bool omit_timing = false;
};

int RunBenchCommand(const BenchArgs& args) {
  BenchConfig config;
  if (!args.config_path.empty()) config = ParseBenchConfig(ReadJsonFile(args.config_path));
  if (!args.sizes.empty()) {
    config.sizes.clear();
    for (const auto& item : SplitCommas(args.sizes)) {
      const auto x = item.find('x');
      try {
        if (x == std::string::npos) throw std::invalid_argument(item);
        const int n = std::stoi(item.substr(0, x));
        const int m = std::stoi(item.substr(x + 1));
        if (n < 1 || m < 0) throw std::invalid_argument(item);
        config.sizes.emplace_back(n, m);
      } catch (const std::exception&) {
        throw InstanceError("size '" + item + "' is not of the form NxM");
      }
    }
  }
  if (!args.families.empty()) {
    config.families.clear();
    for (const auto& name : SplitCommas(args.families)) {
      const std::optional<Family> f = ParseFamily(name);
      if (!f) throw InstanceError("unknown family '" + name + "'");
      config.families.push_back(*f);
    }
  }
  if (config.families.empty()) config.families = {Family::kPartition};
  if (args.trials) config.trials = *args.trials;
  if (args.seed) config.seed = *args.seed;
  if (config.sizes.empty()) throw InstanceError("bench needs --sizes or a --config");
  config.record_timing = !args.omit_timing;

  const std::vector<BenchRecord> records = RunBench(config);
  if (args.out_path.empty()) {
    WriteBenchCsv(std::cout, records);
  } else {
    std::ofstream out(args.out_path);
    if (!out) throw InstanceError("cannot write " + args.out_path);
    WriteBenchCsv(out, records);
  }
  const std::vector<ScalingRow> rows = SummarizeScaling(records);
  for (const auto& row : rows) {
    std::cerr << "n=" << row.n << " m=" << row.m << " family=" << FamilyName(row.family)
              << " trials=" << row.trials << " mean_iterations=" << row.mean_iterations
              << " mean_oracle_calls=" << row.mean_oracle_calls
              << " calls/(m^2(m+n))=" << row.ratio << '\n';
  }
  for (const auto& [family, drift] : RatioDrift(rows)) {
    std::cerr << "ratio drift (max/min) family=" << FamilyName(family) << ": " << drift << '\n';
  }
  return kExitOk;
}

int RunRpe(const std::string& instance_path, int samples, std::uint64_t seed) {
  const Instance instance = LoadInstanceFile(instance_path);
  const RpeResult result = SimulateRpe(instance, {samples, seed});
  json out = RpeToJson(result, instance);
  if (!result.zeroed_agents.empty()) {
    std::cerr << "note: " << result.zeroed_agents.size()
              << " valuation(s) failed the MRF check and were replaced by zero\n";
  }
  Emit(out);
  return kExitOk;
}

int RunCheckOracle(const std::string& instance_path, const std::string& mode_name, int trials,
                   std::uint64_t seed) {
  const Instance instance = LoadInstanceFile(instance_path);
  MrfCheckMode mode;
  if (mode_name == "exhaustive") {
    mode = MrfCheckMode::Exhaustive();
  } else if (mode_name == "sampled") {
    mode = MrfCheckMode::Sampled(trials, seed);
  } else if (mode_name == "auto") {
    mode = DefaultMrfMode(instance);
  } else {
    throw InstanceError("unknown mode '" + mode_name + "'");
  }
  json agents = json::object();
  bool all_valid = true;
  for (int i = 1; i <= instance.num_agents(); ++i) {
    const MrfReport report = CheckMrf(instance.oracle(i), mode);
    all_valid = all_valid && report.valid;
    agents[instance.agent_name(i)] = MrfReportToJson(report, instance);
  }
  Emit({{"all_valid", all_valid}, {"agents", std::move(agents)}});
  return all_valid ? kExitOk : kExitNotMrf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Prioritized Lorenz dominating allocations with Yankee Swap"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Compute an allocation");
  solve_cmd->add_option("instance", solve.instance_path, "Instance JSON file")->required();
  auto* priority_opt = solve_cmd->add_option("--priority-file", solve.priority_file,
                                             "JSON array of agent ids, highest priority first");
  solve_cmd->add_option("--seed-priority", solve.seed_priority,
                        "Draw a uniformly random priority with this seed")
      ->excludes(priority_opt);
  solve_cmd->add_flag("--trace", solve.trace, "Include the iteration trace");
  solve_cmd->add_flag("--check-oracles", solve.check_oracles,
                      "Reject valuations that are not matroid rank functions (exit 3)");
  solve_cmd->add_option("--dump-graph", solve.dump_graph,
                        "Write the final exchange graph as 'g -> h' lines");

  std::string verify_instance, verify_alloc;
  std::optional<std::string> verify_checks;
  auto* verify_cmd = app.add_subcommand("verify", "Check fairness properties of an allocation");
  verify_cmd->add_option("instance", verify_instance)->required();
  verify_cmd->add_option("allocation", verify_alloc)->required();
  verify_cmd->add_option("--checks", verify_checks,
                         "Comma-separated: clean,ef1,efx,half_mms,max_usw,mnw,leximin,"
                         "lorenz,lorenz_augmented (default all)");

  std::string oracle_instance, objective = "lorenz_augmented";
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force optimum over clean allocations");
  oracle_cmd->add_option("instance", oracle_instance)->required();
  oracle_cmd->add_option("--objective", objective,
                         "max_usw | mnw | leximin_plain | lorenz_augmented");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run seeded benchmarks, CSV on stdout");
  bench_cmd->add_option("--config", bench.config_path, "Bench config JSON");
  bench_cmd->add_option("--sizes", bench.sizes, "Comma-separated NxM sizes, e.g. 50x50,100x100");
  bench_cmd->add_option("--families", bench.families, "Comma-separated families");
  bench_cmd->add_option("--trials", bench.trials);
  bench_cmd->add_option("--seed", bench.seed);
  bench_cmd->add_option("--out", bench.out_path, "Write CSV here instead of stdout");
  bench_cmd->add_flag("--omit-timing", bench.omit_timing,
                      "Report wall_time_ns as 0 for reproducible output");

  std::string rpe_instance;
  int rpe_samples = 1000;
  std::uint64_t rpe_seed = 0;
  auto* rpe_cmd = app.add_subcommand("rpe", "Monte Carlo over uniformly random priorities");
  rpe_cmd->add_option("instance", rpe_instance)->required();
  rpe_cmd->add_option("--samples", rpe_samples)->check(CLI::PositiveNumber);
  rpe_cmd->add_option("--seed", rpe_seed);

  std::string check_instance, check_mode = "auto";
  int check_trials = 1000;
  std::uint64_t check_seed = 0;
  auto* check_cmd = app.add_subcommand("check-oracle", "Validate matroid rank axioms");
  check_cmd->add_option("instance", check_instance)->required();
  check_cmd->add_option("--mode", check_mode, "auto | exhaustive | sampled");
  check_cmd->add_option("--trials", check_trials);
  check_cmd->add_option("--seed", check_seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    if (*solve_cmd) return RunSolve(solve);
    if (*verify_cmd) return RunVerify(verify_instance, verify_alloc, verify_checks);
    if (*oracle_cmd) return RunOracle(oracle_instance, objective);
    if (*bench_cmd) return RunBenchCommand(bench);
    if (*rpe_cmd) return RunRpe(rpe_instance, rpe_samples, rpe_seed);
    if (*check_cmd) return RunCheckOracle(check_instance, check_mode, check_trials, check_seed);
  } catch (const InstanceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const GuardError& e) {
    std::cerr << "error: " << e.what()
              << " (set MATROIDSWAP_GUARD_OVERRIDE=1 to lift the limit)\n";
    return kExitInvalidInput;
  } catch (const OracleError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 70;
  }
  return kExitInvalidInput;
}
