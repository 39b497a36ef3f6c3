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

#ifndef MATROIDSWAP_GENERATORS_H_
#define MATROIDSWAP_GENERATORS_H_

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "matroidswap/instance.h"

namespace matroidswap {

enum class Family {
  kAdditive,
  kUniform,
  kPartition,
  kTransversal,
  kGraphic,
  kMixed,
  // Seats grouped into courses. Each course meets in one time slot, so an
  // agent can use at most one seat per course and one course per slot; a
  // global cap bounds the number of courses taken.
  kCourse,
};

std::string_view FamilyName(Family family);
std::optional<Family> ParseFamily(std::string_view name);
std::vector<Family> AllFamilies();

// Uniformly random priority ranks (Fisher-Yates), as a permutation of 1..n.
std::vector<int> RandomPriority(int num_agents, std::mt19937_64& rng);

// Deterministic for a given (family, n, m, seed), including a random
// priority order. Goods are named g1..gm and agents a1..an. Throws
// std::invalid_argument if n < 1 or m < 0.
Instance GenerateInstance(Family family, int num_agents, int num_goods, std::uint64_t seed);

}  // namespace matroidswap

#endif  // MATROIDSWAP_GENERATORS_H_
