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

#ifndef MATROIDSWAP_VALUATION_H_
#define MATROIDSWAP_VALUATION_H_

#include <atomic>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "matroidswap/good_set.h"

namespace matroidswap {

// v(S) = |S ∩ desired|.
struct BinaryAdditive {
  GoodSet desired;
};

// v(S) = min(|S|, cap).
struct Uniform {
  int cap = 0;
};

// v(S) = min(sum_j min(|S ∩ P_j|, cap_j), global_cap). Goods outside every
// part contribute nothing.
struct Partition {
  struct Part {
    GoodSet goods;
    int cap = 0;
  };
  std::vector<Part> parts;
  std::optional<int> global_cap;
};

// v(S) = size of a maximum matching of S into slots, truncated at
// global_cap when set. slots_of_good[g] lists the slots good g may occupy.
struct Transversal {
  std::vector<std::vector<int>> slots_of_good;
  int num_slots = 0;
  std::optional<int> global_cap;
};

// v(S) = size of a spanning forest of the multigraph whose edges are S.
// A good with equal endpoints is a loop and never counts.
struct Graphic {
  std::vector<std::pair<int, int>> endpoints;
  int num_vertices = 0;
};

// Value table indexed by subset bitmask; -1 marks a missing entry.
struct ExplicitTable {
  std::vector<int> table;
};

inline constexpr int kMaxExplicitGoods = 16;

// A matroid rank function over goods {0, ..., num_goods - 1}.
//
// The built-in families are matroid rank functions by construction. Explicit
// tables are only checked for shape; use CheckMrf to validate them.
// Evaluation is const and thread-safe; every Value call bumps an atomic
// counter used as the oracle-cost measure.
class ValuationOracle {
 public:
  using Family = std::variant<BinaryAdditive, Uniform, Partition, Transversal,
                              Graphic, ExplicitTable>;

  // Throws OracleError on a malformed configuration.
  ValuationOracle(int num_goods, Family family);

  ValuationOracle(const ValuationOracle&) = delete;
  ValuationOracle& operator=(const ValuationOracle&) = delete;

  int num_goods() const { return num_goods_; }
  const Family& family() const { return family_; }
  std::string_view kind() const;

  // Throws OracleError if s is over a different universe or hits a
  // missing explicit entry.
  int Value(const GoodSet& s) const;

  // v(s + good) - v(s). Throws OracleError if good is already in s.
  int Marginal(const GoodSet& s, int good) const;

  std::uint64_t calls() const { return calls_.load(std::memory_order_relaxed); }

 private:
  int Evaluate(const GoodSet& s) const;

  int num_goods_;
  Family family_;
  // Partition family only: index of the part holding each good, or -1.
  std::vector<int> part_of_good_;
  mutable std::atomic<std::uint64_t> calls_{0};
};

// Outcome of an MRF axiom check. On failure, the witness is a pair
// smaller ⊆ larger and a good outside larger: for a non-binary gain only
// smaller and good matter.
struct MrfViolation {
  enum class Kind { kNonzeroEmpty, kNonBinaryGain, kNotSubmodular };
  Kind kind;
  GoodSet smaller;
  GoodSet larger;
  int good = -1;
  int gain_smaller = 0;
  int gain_larger = 0;
};

struct MrfReport {
  bool valid = true;
  std::uint64_t checks = 0;
  std::optional<MrfViolation> violation;
};

struct MrfCheckMode {
  enum class Kind { kExhaustive, kSampled };
  Kind kind = Kind::kExhaustive;
  int trials = 0;
  std::uint64_t seed = 0;

  static MrfCheckMode Exhaustive() { return {}; }
  static MrfCheckMode Sampled(int trials, std::uint64_t seed) {
    return {Kind::kSampled, trials, seed};
  }
};

std::string_view MrfViolationName(MrfViolation::Kind kind);

// Exhaustive mode tabulates all 2^m values and checks the local exchange
// form of submodularity, which is equivalent to the S ⊆ T form; it needs
// m <= kMaxExplicitGoods and throws GuardError otherwise. Sampled mode draws
// random chains S ⊆ T and a good outside T.
MrfReport CheckMrf(const ValuationOracle& oracle, const MrfCheckMode& mode);

// Materializes the full value table of oracle (m <= kMaxExplicitGoods).
ExplicitTable Tabulate(const ValuationOracle& oracle);

}  // namespace matroidswap

#endif  // MATROIDSWAP_VALUATION_H_
