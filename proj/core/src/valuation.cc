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

#include "matroidswap/valuation.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "matroidswap/errors.h"

namespace matroidswap {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void RequireUniverse(const GoodSet& s, int num_goods, const char* what) {
  if (s.universe() != num_goods) {
    throw OracleError(std::string(what) + ": good set over " +
                      std::to_string(s.universe()) + " goods, oracle has " +
                      std::to_string(num_goods));
  }
}

int TruncateAt(int value, const std::optional<int>& cap) {
  return cap ? std::min(value, *cap) : value;
}

// Kuhn's augmenting-path bipartite matching from goods to slots.
class SlotMatcher {
 public:
  SlotMatcher(const std::vector<std::vector<int>>& slots_of_good, int num_slots)
      : slots_of_good_(slots_of_good),
        slot_owner_(num_slots, -1),
        seen_(num_slots, 0) {}

  int Match(const GoodSet& s) {
    int matched = 0;
    s.ForEach([&](int g) {
      ++stamp_;
      if (Augment(g)) ++matched;
    });
    return matched;
  }

 private:
  bool Augment(int good) {
    for (int slot : slots_of_good_[good]) {
      if (seen_[slot] == stamp_) continue;
      seen_[slot] = stamp_;
      if (slot_owner_[slot] < 0 || Augment(slot_owner_[slot])) {
        slot_owner_[slot] = good;
        return true;
      }
    }
    return false;
  }

  const std::vector<std::vector<int>>& slots_of_good_;
  std::vector<int> slot_owner_;
  std::vector<int> seen_;
  int stamp_ = 0;
};

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int Find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  // Returns false if a and b were already connected.
  bool Union(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

void Validate(int num_goods, const ValuationOracle::Family& family) {
  if (num_goods < 0) throw OracleError("negative number of goods");
  auto require_cap = [](int cap, const char* what) {
    if (cap < 0) throw OracleError(std::string(what) + " must be nonnegative");
  };
  auto require_universe = [&](const GoodSet& s, const char* what) {
    if (s.universe() != num_goods) {
      throw OracleError(std::string(what) + " is over the wrong good universe");
    }
  };
  std::visit(
      Overloaded{
          [&](const BinaryAdditive& f) { require_universe(f.desired, "desired set"); },
          [&](const Uniform& f) { require_cap(f.cap, "uniform cap"); },
          [&](const Partition& f) {
            GoodSet seen(num_goods);
            for (const auto& part : f.parts) {
              require_universe(part.goods, "partition part");
              require_cap(part.cap, "part cap");
              if (seen.CountIntersection(part.goods) != 0) {
                throw OracleError("partition parts overlap");
              }
              seen |= part.goods;
            }
            if (f.global_cap) require_cap(*f.global_cap, "global cap");
          },
          [&](const Transversal& f) {
            if (static_cast<int>(f.slots_of_good.size()) != num_goods) {
              throw OracleError("transversal adjacency must list every good");
            }
            for (const auto& slots : f.slots_of_good) {
              for (int slot : slots) {
                if (slot < 0 || slot >= f.num_slots) {
                  throw OracleError("transversal slot out of range");
                }
              }
            }
            if (f.global_cap) require_cap(*f.global_cap, "global cap");
          },
          [&](const Graphic& f) {
            if (static_cast<int>(f.endpoints.size()) != num_goods) {
              throw OracleError("graphic endpoints must list every good");
            }
            for (const auto& [u, v] : f.endpoints) {
              if (u < 0 || v < 0 || u >= f.num_vertices || v >= f.num_vertices) {
                throw OracleError("graphic endpoint out of range");
              }
            }
          },
          [&](const ExplicitTable& f) {
            if (num_goods > kMaxExplicitGoods) {
              throw OracleError("explicit tables support at most " +
                                std::to_string(kMaxExplicitGoods) + " goods");
            }
            if (f.table.size() != (std::size_t{1} << num_goods)) {
              throw OracleError("explicit table must have 2^m entries");
            }
            for (int v : f.table) {
              if (v < -1) throw OracleError("explicit table value is negative");
            }
          },
      },
      family);
}

}  // namespace

ValuationOracle::ValuationOracle(int num_goods, Family family)
    : num_goods_(num_goods), family_(std::move(family)) {
  Validate(num_goods_, family_);
  if (const auto* f = std::get_if<Partition>(&family_)) {
    part_of_good_.assign(num_goods_, -1);
    for (std::size_t p = 0; p < f->parts.size(); ++p) {
      f->parts[p].goods.ForEach([&](int g) { part_of_good_[g] = static_cast<int>(p); });
    }
  }
}

std::string_view ValuationOracle::kind() const {
  return std::visit(Overloaded{
                        [](const BinaryAdditive&) { return "binary_additive"; },
                        [](const Uniform&) { return "uniform"; },
                        [](const Partition&) { return "partition"; },
                        [](const Transversal&) { return "transversal"; },
                        [](const Graphic&) { return "graphic"; },
                        [](const ExplicitTable&) { return "explicit"; },
                    },
                    family_);
}

int ValuationOracle::Value(const GoodSet& s) const {
  RequireUniverse(s, num_goods_, "Value");
  calls_.fetch_add(1, std::memory_order_relaxed);
  return Evaluate(s);
}

int ValuationOracle::Marginal(const GoodSet& s, int good) const {
  RequireUniverse(s, num_goods_, "Marginal");
  if (good < 0 || good >= num_goods_) throw OracleError("unknown good");
  if (s.contains(good)) throw OracleError("marginal of a good already held");
  return Value(s.With(good)) - Value(s);
}

int ValuationOracle::Evaluate(const GoodSet& s) const {
  return std::visit(
      Overloaded{
          [&](const BinaryAdditive& f) { return s.CountIntersection(f.desired); },
          [&](const Uniform& f) { return std::min(s.size(), f.cap); },
          [&](const Partition& f) {
            // Sort the members' parts and sum capped run lengths.
            std::vector<int> parts;
            parts.reserve(s.size());
            s.ForEach([&](int g) {
              if (part_of_good_[g] >= 0) parts.push_back(part_of_good_[g]);
            });
            std::sort(parts.begin(), parts.end());
            int total = 0;
            for (std::size_t k = 0; k < parts.size();) {
              std::size_t end = k;
              while (end < parts.size() && parts[end] == parts[k]) ++end;
              total += std::min(static_cast<int>(end - k), f.parts[parts[k]].cap);
              k = end;
            }
            return TruncateAt(total, f.global_cap);
          },
          [&](const Transversal& f) {
            if (f.global_cap && *f.global_cap == 0) return 0;
            SlotMatcher matcher(f.slots_of_good, f.num_slots);
            return TruncateAt(matcher.Match(s), f.global_cap);
          },
          [&](const Graphic& f) {
            DisjointSets forest(f.num_vertices);
            int rank = 0;
            s.ForEach([&](int g) {
              if (forest.Union(f.endpoints[g].first, f.endpoints[g].second)) ++rank;
            });
            return rank;
          },
          [&](const ExplicitTable& f) {
            const int v = f.table[s.ToMask()];
            if (v < 0) {
              throw OracleError("explicit table has no entry for subset mask " +
                                std::to_string(s.ToMask()));
            }
            return v;
          },
      },
      family_);
}

std::string_view MrfViolationName(MrfViolation::Kind kind) {
  switch (kind) {
    case MrfViolation::Kind::kNonzeroEmpty:
      return "nonzero_empty_value";
    case MrfViolation::Kind::kNonBinaryGain:
      return "non_binary_gain";
    case MrfViolation::Kind::kNotSubmodular:
      return "not_submodular";
  }
  return "unknown";
}

ExplicitTable Tabulate(const ValuationOracle& oracle) {
  const int m = oracle.num_goods();
  if (m > kMaxExplicitGoods) {
    throw GuardError("cannot tabulate an oracle over more than " +
                     std::to_string(kMaxExplicitGoods) + " goods");
  }
  ExplicitTable out;
  out.table.resize(std::size_t{1} << m);
  for (std::uint64_t mask = 0; mask < out.table.size(); ++mask) {
    out.table[mask] = oracle.Value(GoodSet::FromMask(m, mask));
  }
  return out;
}

MrfReport CheckMrf(const ValuationOracle& oracle, const MrfCheckMode& mode) {
  const int m = oracle.num_goods();
  MrfReport report;
  auto fail = [&](MrfViolation v) {
    report.valid = false;
    report.violation = std::move(v);
    return report;
  };

  if (mode.kind == MrfCheckMode::Kind::kExhaustive) {
    const std::vector<int> values = Tabulate(oracle).table;
    const std::uint64_t full = std::uint64_t{1} << m;
    ++report.checks;
    if (values[0] != 0) {
      return fail({MrfViolation::Kind::kNonzeroEmpty, GoodSet(m), GoodSet(m), -1,
                   values[0], 0});
    }
    for (std::uint64_t s = 0; s < full; ++s) {
      for (int g = 0; g < m; ++g) {
        const std::uint64_t gb = std::uint64_t{1} << g;
        if (s & gb) continue;
        const int gain = values[s | gb] - values[s];
        ++report.checks;
        if (gain != 0 && gain != 1) {
          return fail({MrfViolation::Kind::kNonBinaryGain, GoodSet::FromMask(m, s),
                       GoodSet::FromMask(m, s), g, gain, gain});
        }
      }
    }
    for (std::uint64_t s = 0; s < full; ++s) {
      for (int g = 0; g < m; ++g) {
        const std::uint64_t gb = std::uint64_t{1} << g;
        if (s & gb) continue;
        const int gain = values[s | gb] - values[s];
        for (int h = 0; h < m; ++h) {
          const std::uint64_t hb = std::uint64_t{1} << h;
          if (h == g || (s & hb)) continue;
          const int gain_larger = values[s | hb | gb] - values[s | hb];
          ++report.checks;
          if (gain < gain_larger) {
            return fail({MrfViolation::Kind::kNotSubmodular, GoodSet::FromMask(m, s),
                         GoodSet::FromMask(m, s | hb), g, gain, gain_larger});
          }
        }
      }
    }
    return report;
  }

  ++report.checks;
  const int empty_value = oracle.Value(GoodSet(m));
  if (empty_value != 0) {
    return fail({MrfViolation::Kind::kNonzeroEmpty, GoodSet(m), GoodSet(m), -1,
                 empty_value, 0});
  }
  if (m == 0) return report;
  std::mt19937_64 rng(mode.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < mode.trials; ++trial) {
    const double p = unit(rng);
    const double q = unit(rng);
    GoodSet smaller(m);
    GoodSet larger(m);
    std::vector<int> outside;
    for (int g = 0; g < m; ++g) {
      if (unit(rng) < p) {
        smaller.insert(g);
        larger.insert(g);
      } else if (unit(rng) < q) {
        larger.insert(g);
      } else {
        outside.push_back(g);
      }
    }
    if (outside.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, outside.size() - 1);
    const int g = outside[pick(rng)];
    const int gain_smaller = oracle.Marginal(smaller, g);
    const int gain_larger = oracle.Marginal(larger, g);
    ++report.checks;
    if (gain_smaller != 0 && gain_smaller != 1) {
      return fail({MrfViolation::Kind::kNonBinaryGain, smaller, smaller, g,
                   gain_smaller, gain_smaller});
    }
    if (gain_larger != 0 && gain_larger != 1) {
      return fail({MrfViolation::Kind::kNonBinaryGain, larger, larger, g,
                   gain_larger, gain_larger});
    }
    if (gain_smaller < gain_larger) {
      return fail({MrfViolation::Kind::kNotSubmodular, smaller, larger, g,
                   gain_smaller, gain_larger});
    }
  }
  return report;
}

}  // namespace matroidswap
