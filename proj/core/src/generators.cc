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

#include "matroidswap/generators.h"

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <string>

namespace matroidswap {
namespace {

constexpr Family kAll[] = {Family::kAdditive,    Family::kUniform, Family::kPartition,
                           Family::kTransversal, Family::kGraphic, Family::kMixed,
                           Family::kCourse};

int UniformInt(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool Coin(std::mt19937_64& rng, double p) {
  return std::bernoulli_distribution(p)(rng);
}

ValuationOracle::Family AdditiveFamily(int m, std::mt19937_64& rng) {
  BinaryAdditive f{GoodSet(m)};
  for (int g = 0; g < m; ++g) {
    if (Coin(rng, 0.5)) f.desired.insert(g);
  }
  return f;
}

ValuationOracle::Family UniformFamily(int n, int m, std::mt19937_64& rng) {
  const int share = (m + n - 1) / n;
  return Uniform{UniformInt(rng, 1, std::max(1, 2 * share))};
}

ValuationOracle::Family PartitionFamily(int m, std::mt19937_64& rng) {
  const int num_parts = UniformInt(rng, 1, std::max(1, m / 3));
  Partition f;
  for (int p = 0; p < num_parts; ++p) {
    f.parts.push_back({GoodSet(m), UniformInt(rng, 1, 3)});
  }
  for (int g = 0; g < m; ++g) {
    if (Coin(rng, 0.2)) continue;
    f.parts[UniformInt(rng, 0, num_parts - 1)].goods.insert(g);
  }
  if (Coin(rng, 0.5)) f.global_cap = UniformInt(rng, 1, std::max(1, m));
  return f;
}

ValuationOracle::Family TransversalFamily(int m, std::mt19937_64& rng) {
  Transversal f;
  f.num_slots = UniformInt(rng, 1, std::max(1, m / 2));
  f.slots_of_good.resize(m);
  for (int g = 0; g < m; ++g) {
    const int degree = UniformInt(rng, 0, std::min(2, f.num_slots));
    auto& slots = f.slots_of_good[g];
    while (static_cast<int>(slots.size()) < degree) {
      const int s = UniformInt(rng, 0, f.num_slots - 1);
      if (std::find(slots.begin(), slots.end(), s) == slots.end()) slots.push_back(s);
    }
    std::sort(slots.begin(), slots.end());
  }
  return f;
}

ValuationOracle::Family GraphicFamily(int m, std::mt19937_64& rng) {
  Graphic f;
  f.num_vertices = UniformInt(rng, 2, std::max(2, m / 2 + 1));
  for (int g = 0; g < m; ++g) {
    f.endpoints.emplace_back(UniformInt(rng, 0, f.num_vertices - 1),
                             UniformInt(rng, 0, f.num_vertices - 1));
  }
  return f;
}

struct CourseCatalog {
  int num_courses = 1;
  int num_time_slots = 1;
  std::vector<int> time_slot;  // per course
};

ValuationOracle::Family CourseFamily(int m, const CourseCatalog& catalog,
                                     std::mt19937_64& rng) {
  Transversal f;
  f.num_slots = catalog.num_time_slots;
  f.slots_of_good.resize(m);
  std::vector<bool> wants(catalog.num_courses);
  for (int c = 0; c < catalog.num_courses; ++c) wants[c] = Coin(rng, 0.6);
  for (int g = 0; g < m; ++g) {
    const int course = g % catalog.num_courses;
    if (wants[course]) f.slots_of_good[g].push_back(catalog.time_slot[course]);
  }
  f.global_cap = UniformInt(rng, 1, std::min(catalog.num_time_slots, 4));
  return f;
}

}  // namespace

std::string_view FamilyName(Family family) {
  switch (family) {
    case Family::kAdditive:
      return "additive";
    case Family::kUniform:
      return "uniform";
    case Family::kPartition:
      return "partition";
    case Family::kTransversal:
      return "transversal";
    case Family::kGraphic:
      return "graphic";
    case Family::kMixed:
      return "mixed";
    case Family::kCourse:
      return "course";
  }
  return "unknown";
}

std::optional<Family> ParseFamily(std::string_view name) {
  for (Family f : kAll) {
    if (FamilyName(f) == name) return f;
  }
  return std::nullopt;
}

std::vector<Family> AllFamilies() { return {std::begin(kAll), std::end(kAll)}; }

std::vector<int> RandomPriority(int num_agents, std::mt19937_64& rng) {
  std::vector<int> ranks(num_agents);
  for (int k = 0; k < num_agents; ++k) ranks[k] = k + 1;
  for (int k = num_agents - 1; k > 0; --k) {
    std::swap(ranks[k], ranks[UniformInt(rng, 0, k)]);
  }
  return ranks;
}

Instance GenerateInstance(Family family, int num_agents, int num_goods, std::uint64_t seed) {
  if (num_agents < 1 || num_goods < 0) {
    throw std::invalid_argument("instance sizes need n >= 1 and m >= 0");
  }
  const int n = num_agents;
  const int m = num_goods;
  std::mt19937_64 rng(seed);

  CourseCatalog catalog;
  if (family == Family::kCourse) {
    catalog.num_courses = std::max(1, (m + 2) / 3);
    catalog.num_time_slots = catalog.num_courses / 2 + 1;
    for (int c = 0; c < catalog.num_courses; ++c) {
      catalog.time_slot.push_back(UniformInt(rng, 0, catalog.num_time_slots - 1));
    }
  }

  std::vector<std::string> goods;
  for (int g = 1; g <= m; ++g) goods.push_back("g" + std::to_string(g));
  std::vector<std::string> agents;
  std::vector<Instance::OraclePtr> oracles;
  for (int i = 1; i <= n; ++i) {
    agents.push_back("a" + std::to_string(i));
    Family f = family;
    if (f == Family::kMixed) f = kAll[UniformInt(rng, 0, 4)];
    ValuationOracle::Family config;
    switch (f) {
      case Family::kAdditive:
        config = AdditiveFamily(m, rng);
        break;
      case Family::kUniform:
        config = UniformFamily(n, m, rng);
        break;
      case Family::kPartition:
        config = PartitionFamily(m, rng);
        break;
      case Family::kTransversal:
        config = TransversalFamily(m, rng);
        break;
      case Family::kGraphic:
        config = GraphicFamily(m, rng);
        break;
      case Family::kCourse:
        config = CourseFamily(m, catalog, rng);
        break;
      case Family::kMixed:
        break;  // resolved above
    }
    oracles.push_back(std::make_shared<const ValuationOracle>(m, std::move(config)));
  }
  std::vector<int> ranks = RandomPriority(n, rng);
  return Instance(std::move(goods), std::move(agents), std::move(oracles), std::move(ranks));
}

}  // namespace matroidswap
