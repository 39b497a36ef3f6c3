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

#include "matroidswap/io.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <memory>
#include <set>
#include <sstream>

#include "matroidswap/errors.h"
#include "matroidswap/utility.h"

namespace matroidswap {

using nlohmann::json;

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void RequireObject(const json& j, const std::string& context) {
  if (!j.is_object()) throw InstanceError(context + " must be a JSON object");
}

void RequireArray(const json& j, const std::string& context) {
  if (!j.is_array()) throw InstanceError(context + " must be a JSON array");
}

void RejectUnknownKeys(const json& j, std::initializer_list<const char*> allowed,
                       const std::string& context) {
  for (const auto& [key, value] : j.items()) {
    if (std::none_of(allowed.begin(), allowed.end(),
                     [&](const char* a) { return key == a; })) {
      throw InstanceError("unknown field '" + key + "' in " + context);
    }
  }
}

const json& Field(const json& j, const char* key, const std::string& context) {
  auto it = j.find(key);
  if (it == j.end()) throw InstanceError(context + " is missing '" + key + "'");
  return *it;
}

std::string AsString(const json& j, const std::string& context) {
  if (!j.is_string()) throw InstanceError(context + " must be a string");
  return j.get<std::string>();
}

// Slot and vertex labels may be strings or integers.
std::string AsLabel(const json& j, const std::string& context) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return j.dump();
  throw InstanceError(context + " must be a string or integer label");
}

int AsCount(const json& j, const std::string& context) {
  if (!j.is_number_integer() || j.get<long long>() < 0 ||
      j.get<long long>() > std::numeric_limits<int>::max()) {
    throw InstanceError(context + " must be a nonnegative integer");
  }
  return j.get<int>();
}

class GoodIndex {
 public:
  explicit GoodIndex(const std::vector<std::string>& goods) : num_goods_(goods.size()) {
    for (std::size_t g = 0; g < goods.size(); ++g) index_[goods[g]] = static_cast<int>(g);
  }

  int operator()(const json& name, const std::string& context) const {
    const std::string s = AsString(name, context);
    auto it = index_.find(s);
    if (it == index_.end()) throw InstanceError("unknown good '" + s + "' in " + context);
    return it->second;
  }

  GoodSet Set(const json& list, const std::string& context) const {
    RequireArray(list, context);
    GoodSet out(num_goods_);
    for (const auto& name : list) out.insert((*this)(name, context));
    return out;
  }

  int size() const { return num_goods_; }

 private:
  int num_goods_;
  std::map<std::string, int> index_;
};

std::optional<int> OptionalCap(const json& j, const std::string& context) {
  auto it = j.find("global_cap");
  if (it == j.end() || it->is_null()) return std::nullopt;
  return AsCount(*it, context + ".global_cap");
}

ValuationOracle::Family ParseFamilyConfig(const json& j, const GoodIndex& goods,
                                          const std::string& context) {
  RequireObject(j, context);
  const std::string type = AsString(Field(j, "type", context), context + ".type");
  const int m = goods.size();

  if (type == "binary_additive") {
    RejectUnknownKeys(j, {"type", "desired"}, context);
    return BinaryAdditive{goods.Set(Field(j, "desired", context), context + ".desired")};
  }
  if (type == "uniform") {
    RejectUnknownKeys(j, {"type", "cap"}, context);
    return Uniform{AsCount(Field(j, "cap", context), context + ".cap")};
  }
  if (type == "partition") {
    RejectUnknownKeys(j, {"type", "parts", "global_cap"}, context);
    const json& parts = Field(j, "parts", context);
    RequireArray(parts, context + ".parts");
    Partition f;
    for (const auto& part : parts) {
      const std::string pc = context + ".parts[]";
      RequireObject(part, pc);
      RejectUnknownKeys(part, {"goods", "cap"}, pc);
      f.parts.push_back({goods.Set(Field(part, "goods", pc), pc + ".goods"),
                         AsCount(Field(part, "cap", pc), pc + ".cap")});
    }
    f.global_cap = OptionalCap(j, context);
    return f;
  }
  if (type == "transversal") {
    RejectUnknownKeys(j, {"type", "adjacency", "global_cap"}, context);
    const json& adjacency = Field(j, "adjacency", context);
    RequireObject(adjacency, context + ".adjacency");
    std::set<std::string> labels;
    for (const auto& [good, slots] : adjacency.items()) {
      RequireArray(slots, context + ".adjacency." + good);
      for (const auto& s : slots) labels.insert(AsLabel(s, context + ".adjacency." + good));
    }
    std::map<std::string, int> slot_index;
    for (const auto& label : labels) slot_index.emplace(label, slot_index.size());
    Transversal f;
    f.num_slots = static_cast<int>(slot_index.size());
    f.slots_of_good.resize(m);
    for (const auto& [good, slots] : adjacency.items()) {
      const int g = goods(json(good), context + ".adjacency");
      for (const auto& s : slots) {
        const int idx = slot_index.at(AsLabel(s, context));
        auto& list = f.slots_of_good[g];
        if (std::find(list.begin(), list.end(), idx) == list.end()) list.push_back(idx);
      }
      std::sort(f.slots_of_good[g].begin(), f.slots_of_good[g].end());
    }
    f.global_cap = OptionalCap(j, context);
    return f;
  }
  if (type == "graphic") {
    RejectUnknownKeys(j, {"type", "endpoints"}, context);
    const json& endpoints = Field(j, "endpoints", context);
    RequireObject(endpoints, context + ".endpoints");
    std::set<std::string> labels;
    for (const auto& [good, pair] : endpoints.items()) {
      const std::string pc = context + ".endpoints." + good;
      RequireArray(pair, pc);
      if (pair.size() != 2) throw InstanceError(pc + " must have two endpoints");
      labels.insert(AsLabel(pair[0], pc));
      labels.insert(AsLabel(pair[1], pc));
    }
    std::map<std::string, int> vertex;
    for (const auto& label : labels) vertex.emplace(label, vertex.size());
    // Missing goods become loops on a dedicated vertex.
    const int loop_vertex = static_cast<int>(vertex.size());
    Graphic f;
    f.num_vertices = loop_vertex + 1;
    f.endpoints.assign(m, {loop_vertex, loop_vertex});
    for (const auto& [good, pair] : endpoints.items()) {
      const int g = goods(json(good), context + ".endpoints");
      f.endpoints[g] = {vertex.at(AsLabel(pair[0], context)),
                        vertex.at(AsLabel(pair[1], context))};
    }
    return f;
  }
  if (type == "explicit") {
    RejectUnknownKeys(j, {"type", "table"}, context);
    if (m > kMaxExplicitGoods) {
      throw InstanceError(context + ": explicit tables support at most " +
                          std::to_string(kMaxExplicitGoods) + " goods");
    }
    const json& table = Field(j, "table", context);
    const std::size_t size = std::size_t{1} << m;
    ExplicitTable f;
    f.table.assign(size, -1);
    if (table.is_array()) {
      if (table.size() != size) {
        throw InstanceError(context + ".table must have 2^m entries");
      }
      for (std::size_t k = 0; k < size; ++k) {
        f.table[k] = AsCount(table[k], context + ".table");
      }
    } else {
      RequireObject(table, context + ".table");
      for (const auto& [key, value] : table.items()) {
        std::size_t mask = 0;
        std::size_t used = 0;
        try {
          mask = std::stoull(key, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used != key.size() || key.empty() || mask >= size) {
          throw InstanceError(context + ".table has invalid subset mask '" + key + "'");
        }
        f.table[mask] = AsCount(value, context + ".table." + key);
      }
    }
    return f;
  }
  throw InstanceError(context + " has unknown valuation type '" + type + "'");
}

json GoodList(const GoodSet& s, const Instance& instance) {
  json out = json::array();
  s.ForEach([&](int g) { out.push_back(instance.good_name(g)); });
  return out;
}

json FamilyToJson(const ValuationOracle& oracle, const Instance& instance) {
  json out;
  out["type"] = std::string(oracle.kind());
  std::visit(
      Overloaded{
          [&](const BinaryAdditive& f) { out["desired"] = GoodList(f.desired, instance); },
          [&](const Uniform& f) { out["cap"] = f.cap; },
          [&](const Partition& f) {
            out["parts"] = json::array();
            for (const auto& p : f.parts) {
              out["parts"].push_back({{"goods", GoodList(p.goods, instance)}, {"cap", p.cap}});
            }
            if (f.global_cap) out["global_cap"] = *f.global_cap;
          },
          [&](const Transversal& f) {
            json adjacency = json::object();
            for (int g = 0; g < instance.num_goods(); ++g) {
              json slots = json::array();
              for (int s : f.slots_of_good[g]) slots.push_back("s" + std::to_string(s));
              adjacency[instance.good_name(g)] = std::move(slots);
            }
            out["adjacency"] = std::move(adjacency);
            if (f.global_cap) out["global_cap"] = *f.global_cap;
          },
          [&](const Graphic& f) {
            json endpoints = json::object();
            for (int g = 0; g < instance.num_goods(); ++g) {
              endpoints[instance.good_name(g)] = {"v" + std::to_string(f.endpoints[g].first),
                                                  "v" + std::to_string(f.endpoints[g].second)};
            }
            out["endpoints"] = std::move(endpoints);
          },
          [&](const ExplicitTable& f) {
            json table = json::object();
            for (std::size_t k = 0; k < f.table.size(); ++k) {
              if (f.table[k] >= 0) table[std::to_string(k)] = f.table[k];
            }
            out["table"] = std::move(table);
          },
      },
      oracle.family());
  return out;
}

json NashToJson(const NashWelfare& w) {
  return {{"zero_count", w.zero_count}, {"product", w.product.str()}};
}

json UtilitiesByAgent(const std::vector<int>& utilities, const Instance& instance) {
  json out = json::object();
  for (int i = 1; i <= instance.num_agents(); ++i) {
    out[instance.agent_name(i)] = utilities[i - 1];
  }
  return out;
}

}  // namespace

nlohmann::json ReadJsonFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InstanceError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InstanceError(path.string() + ": malformed JSON: " + e.what());
  }
}

Instance ParseInstance(const json& doc) {
  RequireObject(doc, "instance");
  RejectUnknownKeys(doc, {"goods", "agents", "priority"}, "instance");
  const json& goods_json = Field(doc, "goods", "instance");
  RequireArray(goods_json, "instance.goods");
  std::vector<std::string> goods;
  for (const auto& g : goods_json) goods.push_back(AsString(g, "good id"));
  const json& agents_json = Field(doc, "agents", "instance");
  RequireArray(agents_json, "instance.agents");

  // Duplicate good ids would make name lookup ambiguous; check before indexing.
  std::set<std::string> unique_goods(goods.begin(), goods.end());
  if (unique_goods.size() != goods.size()) throw InstanceError("duplicate good id");
  const GoodIndex index(goods);

  std::vector<std::string> agents;
  std::vector<Instance::OraclePtr> oracles;
  for (const auto& a : agents_json) {
    RequireObject(a, "agent");
    RejectUnknownKeys(a, {"id", "valuation"}, "agent");
    const std::string id = AsString(Field(a, "id", "agent"), "agent id");
    const std::string context = "valuation of " + id;
    ValuationOracle::Family family = ParseFamilyConfig(Field(a, "valuation", "agent " + id),
                                                       index, context);
    try {
      oracles.push_back(
          std::make_shared<const ValuationOracle>(index.size(), std::move(family)));
    } catch (const OracleError& e) {
      throw InstanceError(context + ": " + e.what());
    }
    agents.push_back(id);
  }

  Instance instance(std::move(goods), std::move(agents), std::move(oracles));
  auto it = doc.find("priority");
  if (it != doc.end() && !it->is_null()) {
    return instance.WithPriority(ParsePriority(*it, instance));
  }
  return instance;
}

Instance LoadInstanceFile(const std::filesystem::path& path) {
  return ParseInstance(ReadJsonFile(path));
}

json InstanceToJson(const Instance& instance) {
  json out;
  out["goods"] = instance.goods();
  out["agents"] = json::array();
  for (int i = 1; i <= instance.num_agents(); ++i) {
    out["agents"].push_back(
        {{"id", instance.agent_name(i)}, {"valuation", FamilyToJson(instance.oracle(i), instance)}});
  }
  if (instance.has_explicit_priority()) out["priority"] = PriorityToJson(instance);
  return out;
}

std::vector<int> ParsePriority(const json& doc, const Instance& instance) {
  RequireArray(doc, "priority");
  const int n = instance.num_agents();
  if (static_cast<int>(doc.size()) != n) {
    throw InstanceError("priority must list every agent exactly once");
  }
  std::vector<int> ranks(n, 0);
  int rank = 1;
  for (const auto& entry : doc) {
    const std::string id = AsString(entry, "priority entry");
    const std::optional<int> agent = instance.FindAgent(id);
    if (!agent) throw InstanceError("priority names unknown agent '" + id + "'");
    if (ranks[*agent - 1] != 0) throw InstanceError("priority repeats agent '" + id + "'");
    ranks[*agent - 1] = rank++;
  }
  return ranks;
}

json PriorityToJson(const Instance& instance) {
  json out = json::array();
  for (int i : instance.AgentsByPriority()) out.push_back(instance.agent_name(i));
  return out;
}

json AllocationToJson(const Allocation& alloc, const Instance& instance) {
  json bundles = json::object();
  for (int i = 1; i <= instance.num_agents(); ++i) {
    bundles[instance.agent_name(i)] = GoodList(alloc.bundle(i), instance);
  }
  return {{"allocation", std::move(bundles)},
          {"unallocated", GoodList(alloc.unallocated(), instance)}};
}

Allocation ParseAllocation(const json& doc, const Instance& instance) {
  RequireObject(doc, "allocation file");
  const json& bundles = Field(doc, "allocation", "allocation file");
  RequireObject(bundles, "allocation");
  const GoodIndex index(instance.goods());
  std::vector<int> owners(instance.num_goods(), kPile);
  std::vector<bool> listed(instance.num_goods(), false);
  auto claim = [&](int g, int agent) {
    if (listed[g]) {
      throw InstanceError("good '" + instance.good_name(g) + "' is listed twice");
    }
    listed[g] = true;
    owners[g] = agent;
  };
  for (const auto& [id, goods] : bundles.items()) {
    const std::optional<int> agent = instance.FindAgent(id);
    if (!agent) throw InstanceError("allocation names unknown agent '" + id + "'");
    RequireArray(goods, "bundle of " + id);
    for (const auto& g : goods) claim(index(g, "bundle of " + id), *agent);
  }
  if (auto it = doc.find("unallocated"); it != doc.end()) {
    RequireArray(*it, "unallocated");
    for (const auto& g : *it) claim(index(g, "unallocated"), kPile);
  }
  return AllocationFromOwners(instance, owners);
}

json TraceToJson(const SolveTrace& trace, const Instance& instance) {
  json out;
  out["total_iterations"] = trace.total_iterations;
  out["graph_builds"] = trace.graph_builds;
  out["oracle_calls"] = trace.oracle_calls;
  json removal = json::array();
  for (int i : trace.removal_order) removal.push_back(instance.agent_name(i));
  out["removal_order"] = std::move(removal);
  json iterations = json::array();
  for (const auto& it : trace.iterations) {
    json path = json::array();
    for (int g : it.path) path.push_back(instance.good_name(g));
    json sizes = json::object();
    for (int j = 1; j <= instance.num_agents(); ++j) {
      sizes[instance.agent_name(j)] = it.bundle_sizes_before[j];
    }
    iterations.push_back({{"agent", instance.agent_name(it.agent)},
                          {"bundle_sizes_before", std::move(sizes)},
                          {"unallocated_before", it.bundle_sizes_before[kPile]},
                          {"path_found", it.path_found},
                          {"path", std::move(path)},
                          {"oracle_calls", it.oracle_calls}});
  }
  out["iterations"] = std::move(iterations);
  return out;
}

json WitnessToJson(const Witness& witness, const Instance& instance) {
  return std::visit(
      Overloaded{
          [&](const CleanWitness& w) -> json {
            return {{"kind", "unclean_bundle"},
                    {"agent", instance.agent_name(w.agent)},
                    {"value", w.value},
                    {"size", w.size}};
          },
          [&](const EnvyWitness& w) -> json {
            json out = {{"kind", "envy"},
                        {"agent", instance.agent_name(w.agent)},
                        {"envied", instance.agent_name(w.envied)},
                        {"own_value", w.own_value},
                        {"envied_value", w.envied_value},
                        {"value_without_good", w.value_without_good}};
            if (w.good) out["good"] = instance.good_name(*w.good);
            return out;
          },
          [&](const MmsWitness& w) -> json {
            return {{"kind", "mms_shortfall"},
                    {"agent", instance.agent_name(w.agent)},
                    {"mms", w.mms},
                    {"value", w.value},
                    {"fraction", std::to_string(w.c_num) + "/" + std::to_string(w.c_den)}};
          },
          [&](const ImprovementWitness& w) -> json {
            json out = {{"kind", "better_allocation"},
                        {"better_allocation", AllocationToJson(w.better_allocation, instance)}};
            if (w.actual_nash) out["actual"] = NashToJson(*w.actual_nash);
            else out["actual"] = w.actual;
            if (w.better_nash) out["better"] = NashToJson(*w.better_nash);
            else out["better"] = w.better;
            return out;
          },
      },
      witness);
}

json ReportToJson(const FairnessReport& report, const Instance& instance) {
  json checks_run = json::array();
  json results = json::object();
  for (const auto& r : report.results) {
    const std::string name(CheckName(r.check));
    checks_run.push_back(name);
    json entry = {{"pass", r.passed}};
    if (r.witness) entry["witness"] = WitnessToJson(*r.witness, instance);
    results[name] = std::move(entry);
  }
  return {{"all_pass", report.all_passed()},
          {"checks_run", std::move(checks_run)},
          {"results", std::move(results)}};
}

json MrfReportToJson(const MrfReport& report, const Instance& instance) {
  json out = {{"valid", report.valid}, {"checks", report.checks}};
  if (report.violation) {
    const MrfViolation& v = *report.violation;
    json vj = {{"kind", std::string(MrfViolationName(v.kind))},
               {"smaller", GoodList(v.smaller, instance)},
               {"larger", GoodList(v.larger, instance)},
               {"gain_smaller", v.gain_smaller},
               {"gain_larger", v.gain_larger}};
    if (v.good >= 0) vj["good"] = instance.good_name(v.good);
    out["violation"] = std::move(vj);
  }
  return out;
}

json OptimumToJson(const Optimum& optimum, const Instance& instance) {
  json out = AllocationToJson(optimum.witness, instance);
  out["objective"] = std::string(ObjectiveName(optimum.objective));
  if (optimum.nash) {
    out["value"] = NashToJson(*optimum.nash);
  } else {
    out["value"] = optimum.value;
  }
  out["utilities"] = UtilitiesByAgent(optimum.witness_utilities, instance);
  out["clean_allocations_enumerated"] = optimum.enumerated;
  return out;
}

json RpeToJson(const RpeResult& result, const Instance& instance) {
  json agents = json::object();
  const int n = instance.num_agents();
  for (int i = 0; i < n; ++i) {
    json value_of = json::object();
    json margins = json::object();
    for (int j = 0; j < n; ++j) {
      value_of[instance.agent_name(j + 1)] = result.envy_matrix[i][j];
      margins[instance.agent_name(j + 1)] = result.envy_margins[i][j];
    }
    agents[instance.agent_name(i + 1)] = {
        {"mean_utility", result.mean_utility[i]},
        {"std_error", result.std_error[i]},
        {"mean_value_of_bundle", std::move(value_of)},
        {"envy_margin", std::move(margins)},
        {"proportionality_margin", result.proportionality_margins[i]}};
  }
  json zeroed = json::array();
  for (int i : result.zeroed_agents) zeroed.push_back(instance.agent_name(i));
  return {{"samples", result.samples}, {"agents", std::move(agents)},
          {"zeroed_agents", std::move(zeroed)}};
}

BenchConfig ParseBenchConfig(const json& doc) {
  RequireObject(doc, "bench config");
  RejectUnknownKeys(doc, {"sizes", "families", "trials", "seed"}, "bench config");
  BenchConfig config;
  const json& sizes = Field(doc, "sizes", "bench config");
  RequireArray(sizes, "bench config sizes");
  for (const auto& s : sizes) {
    if (!s.is_array() || s.size() != 2) throw InstanceError("each size must be [n, m]");
    const int n = AsCount(s[0], "n");
    const int m = AsCount(s[1], "m");
    if (n < 1) throw InstanceError("bench sizes need n >= 1");
    config.sizes.emplace_back(n, m);
  }
  if (auto it = doc.find("families"); it != doc.end()) {
    RequireArray(*it, "bench config families");
    for (const auto& f : *it) {
      const std::string name = AsString(f, "family");
      const std::optional<Family> family = ParseFamily(name);
      if (!family) throw InstanceError("unknown family '" + name + "'");
      config.families.push_back(*family);
    }
  } else {
    config.families = {Family::kPartition};
  }
  if (auto it = doc.find("trials"); it != doc.end()) config.trials = AsCount(*it, "trials");
  if (auto it = doc.find("seed"); it != doc.end()) {
    if (!it->is_number_unsigned() && !(it->is_number_integer() && it->get<long long>() >= 0)) {
      throw InstanceError("seed must be a nonnegative integer");
    }
    config.seed = it->get<std::uint64_t>();
  }
  return config;
}

}  // namespace matroidswap
