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

#include "matroidswap/good_set.h"

#include <bit>
#include <cassert>
#include <stdexcept>

namespace matroidswap {

GoodSet::GoodSet(int universe)
    : universe_(universe), words_((universe + 63) / 64, 0) {
  if (universe < 0) throw std::invalid_argument("negative good universe");
}

GoodSet GoodSet::Full(int universe) {
  GoodSet s(universe);
  for (int g = 0; g < universe; ++g) s.insert(g);
  return s;
}

GoodSet GoodSet::FromMask(int universe, std::uint64_t mask) {
  if (universe > 64) throw std::invalid_argument("mask universe exceeds 64");
  GoodSet s(universe);
  if (universe < 64) mask &= (std::uint64_t{1} << universe) - 1;
  if (!s.words_.empty()) s.words_[0] = mask;
  return s;
}

GoodSet GoodSet::FromGoods(int universe, const std::vector<int>& goods) {
  GoodSet s(universe);
  for (int g : goods) {
    if (g < 0 || g >= universe) throw std::out_of_range("good out of range");
    s.insert(g);
  }
  return s;
}

int GoodSet::size() const {
  int total = 0;
  for (std::uint64_t w : words_) total += std::popcount(w);
  return total;
}

bool GoodSet::empty() const {
  for (std::uint64_t w : words_) {
    if (w != 0) return false;
  }
  return true;
}

GoodSet GoodSet::With(int good) const {
  GoodSet s = *this;
  s.insert(good);
  return s;
}

GoodSet GoodSet::Without(int good) const {
  GoodSet s = *this;
  s.erase(good);
  return s;
}

int GoodSet::CountIntersection(const GoodSet& other) const {
  assert(universe_ == other.universe_);
  int total = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    total += std::popcount(words_[w] & other.words_[w]);
  }
  return total;
}

bool GoodSet::IsSubsetOf(const GoodSet& other) const {
  assert(universe_ == other.universe_);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

GoodSet& GoodSet::operator|=(const GoodSet& other) {
  assert(universe_ == other.universe_);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

GoodSet& GoodSet::operator&=(const GoodSet& other) {
  assert(universe_ == other.universe_);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

GoodSet& GoodSet::operator-=(const GoodSet& other) {
  assert(universe_ == other.universe_);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

std::uint64_t GoodSet::ToMask() const {
  if (universe_ > 64) throw std::logic_error("ToMask on a universe above 64");
  return words_.empty() ? 0 : words_[0];
}

std::vector<int> GoodSet::ToVector() const {
  std::vector<int> out;
  out.reserve(size());
  ForEach([&](int g) { out.push_back(g); });
  return out;
}

}  // namespace matroidswap
