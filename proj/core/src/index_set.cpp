// Copyright 2026 The depprof Authors. All rights reserved.
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

#include "depprof/index_set.hpp"

#include <algorithm>
#include <bit>

namespace depprof {

IndexSet::IndexSet(std::initializer_list<std::size_t> indices) {
  for (auto i : indices) insert(i);
}

IndexSet IndexSet::full(std::size_t n) {
  IndexSet s;
  if (n == 0) return s;
  s.words_.assign((n + kWordBits - 1) / kWordBits, ~Word{0});
  if (auto rem = n % kWordBits; rem != 0) s.words_.back() = (Word{1} << rem) - 1;
  return s;
}

void IndexSet::insert(std::size_t i) {
  const auto w = i / kWordBits;
  if (w >= words_.size()) words_.resize(w + 1, 0);
  words_[w] |= Word{1} << (i % kWordBits);
}

void IndexSet::erase(std::size_t i) {
  const auto w = i / kWordBits;
  if (w >= words_.size()) return;
  words_[w] &= ~(Word{1} << (i % kWordBits));
  trim();
}

bool IndexSet::contains(std::size_t i) const {
  const auto w = i / kWordBits;
  return w < words_.size() && (words_[w] >> (i % kWordBits)) & 1U;
}

std::size_t IndexSet::size() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::size_t IndexSet::bound() const {
  if (words_.empty()) return 0;
  const auto top = words_.back();
  return (words_.size() - 1) * kWordBits + (kWordBits - static_cast<std::size_t>(std::countl_zero(top)));
}

std::size_t IndexSet::next(std::size_t from) const {
  auto w = from / kWordBits;
  if (w >= words_.size()) return npos;
  auto word = words_[w] & (~Word{0} << (from % kWordBits));
  while (true) {
    if (word != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(word));
    if (++w >= words_.size()) return npos;
    word = words_[w];
  }
}

bool IndexSet::intersects(const IndexSet& other) const {
  const auto n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i)
    if (words_[i] & other.words_[i]) return true;
  return false;
}

bool IndexSet::is_subset_of(const IndexSet& other) const {
  if (words_.size() > other.words_.size()) return false;
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

std::size_t IndexSet::intersection_size(const IndexSet& other) const {
  const auto n = std::min(words_.size(), other.words_.size());
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i) c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  return c;
}

IndexSet& IndexSet::operator|=(const IndexSet& other) {
  if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
  for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

IndexSet& IndexSet::operator&=(const IndexSet& other) {
  if (words_.size() > other.words_.size()) words_.resize(other.words_.size());
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  trim();
  return *this;
}

IndexSet& IndexSet::operator-=(const IndexSet& other) {
  const auto n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i) words_[i] &= ~other.words_[i];
  trim();
  return *this;
}

IndexSet IndexSet::complement(std::size_t n) const { return full(n) - *this; }

std::vector<std::size_t> IndexSet::to_vector() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for (auto i : *this) out.push_back(i);
  return out;
}

std::string IndexSet::to_string() const {
  std::string out = "{";
  bool first_elem = true;
  for (auto i : *this) {
    if (!first_elem) out += ',';
    out += std::to_string(i);
    first_elem = false;
  }
  out += '}';
  return out;
}

std::strong_ordering IndexSet::operator<=>(const IndexSet& other) const {
  auto a = begin();
  auto b = other.begin();
  while (a != end() && b != other.end()) {
    if (*a != *b) return *a < *b ? std::strong_ordering::less : std::strong_ordering::greater;
    ++a;
    ++b;
  }
  if (a == end() && b == other.end()) return std::strong_ordering::equal;
  return a == end() ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::size_t IndexSet::hash() const {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto w : words_) {
    h ^= static_cast<std::size_t>(w);
    h *= 0x100000001b3ULL;
  }
  return h;
}

void IndexSet::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

void canonicalize(std::vector<IndexSet>& family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

}  // namespace depprof
