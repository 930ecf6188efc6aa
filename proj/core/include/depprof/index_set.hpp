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

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace depprof {

/// A finite set of non-negative indices stored as a growable bitset.
///
/// Used for vertex sets, attribute sets and variable assignments alike. The
/// word vector never carries trailing zero words, so two sets are equal iff
/// their storage is equal. Ordering is lexicographic on the ascending index
/// sequence: {} < {0} < {0,1} < {1}.
class IndexSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = std::size_t;
    using difference_type = std::ptrdiff_t;
    using pointer = const std::size_t*;
    using reference = std::size_t;

    const_iterator() = default;
    std::size_t operator*() const { return pos_; }
    const_iterator& operator++() {
      pos_ = owner_->next(pos_ + 1);
      return *this;
    }
    const_iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const const_iterator& o) const { return pos_ == o.pos_; }

   private:
    friend class IndexSet;
    const_iterator(const IndexSet* owner, std::size_t pos) : owner_(owner), pos_(pos) {}
    const IndexSet* owner_ = nullptr;
    std::size_t pos_ = 0;
  };

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  IndexSet() = default;
  IndexSet(std::initializer_list<std::size_t> indices);
  template <class It>
  IndexSet(It first, It last) {
    for (; first != last; ++first) insert(static_cast<std::size_t>(*first));
  }

  /// {0, 1, ..., n-1}
  static IndexSet full(std::size_t n);

  void insert(std::size_t i);
  void erase(std::size_t i);
  bool contains(std::size_t i) const;

  bool empty() const { return words_.empty(); }
  std::size_t size() const;
  /// One past the largest element, 0 for the empty set.
  std::size_t bound() const;

  /// Smallest element >= from, or npos.
  std::size_t next(std::size_t from) const;
  std::size_t first() const { return next(0); }

  const_iterator begin() const { return {this, next(0)}; }
  const_iterator end() const { return {this, npos}; }

  bool intersects(const IndexSet& other) const;
  bool is_subset_of(const IndexSet& other) const;
  bool is_proper_subset_of(const IndexSet& other) const {
    return is_subset_of(other) && *this != other;
  }
  std::size_t intersection_size(const IndexSet& other) const;

  IndexSet& operator|=(const IndexSet& other);
  IndexSet& operator&=(const IndexSet& other);
  IndexSet& operator-=(const IndexSet& other);
  friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }
  friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }
  friend IndexSet operator-(IndexSet a, const IndexSet& b) { return a -= b; }

  /// {0..n-1} \ this
  IndexSet complement(std::size_t n) const;

  std::vector<std::size_t> to_vector() const;
  /// Renders as "{0,2,5}".
  std::string to_string() const;

  bool operator==(const IndexSet& other) const = default;
  std::strong_ordering operator<=>(const IndexSet& other) const;

  std::size_t hash() const;
  const std::vector<Word>& words() const { return words_; }

 private:
  void trim();
  std::vector<Word> words_;
};

/// Sorts a family of sets canonically and drops duplicates.
void canonicalize(std::vector<IndexSet>& family);

}  // namespace depprof

template <>
struct std::hash<depprof::IndexSet> {
  std::size_t operator()(const depprof::IndexSet& s) const noexcept { return s.hash(); }
};
