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

#ifndef MATROIDSWAP_GOOD_SET_H_
#define MATROIDSWAP_GOOD_SET_H_

#include <bit>
#include <cstdint>
#include <vector>

namespace matroidswap {

// A subset of the goods {0, ..., universe - 1}, stored as a bitset.
class GoodSet {
 public:
  GoodSet() = default;
  explicit GoodSet(int universe);

  static GoodSet Full(int universe);
  // Bit k of mask selects good k. Requires universe <= 64.
  static GoodSet FromMask(int universe, std::uint64_t mask);
  static GoodSet FromGoods(int universe, const std::vector<int>& goods);

  int universe() const { return universe_; }

  bool contains(int good) const {
    return (words_[good >> 6] >> (good & 63)) & 1U;
  }
  void insert(int good) { words_[good >> 6] |= std::uint64_t{1} << (good & 63); }
  void erase(int good) { words_[good >> 6] &= ~(std::uint64_t{1} << (good & 63)); }

  int size() const;
  bool empty() const;

  GoodSet With(int good) const;
  GoodSet Without(int good) const;

  int CountIntersection(const GoodSet& other) const;
  bool IsSubsetOf(const GoodSet& other) const;

  GoodSet& operator|=(const GoodSet& other);
  GoodSet& operator&=(const GoodSet& other);
  GoodSet& operator-=(const GoodSet& other);
  friend GoodSet operator|(GoodSet a, const GoodSet& b) { return a |= b; }
  friend GoodSet operator&(GoodSet a, const GoodSet& b) { return a &= b; }
  friend GoodSet operator-(GoodSet a, const GoodSet& b) { return a -= b; }
  friend bool operator==(const GoodSet&, const GoodSet&) = default;

  std::uint64_t ToMask() const;
  std::vector<int> ToVector() const;

  // Calls fn(good) for each member in ascending order.
  template <typename Fn>
  void ForEach(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int bit = std::countr_zero(bits);
        fn(static_cast<int>(w * 64) + bit);
        bits &= bits - 1;
      }
    }
  }

 private:
  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace matroidswap

#endif  // MATROIDSWAP_GOOD_SET_H_
