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

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "depprof/hypergraph.hpp"
#include "depprof/index_set.hpp"

namespace depprof {

using AttrSet = IndexSet;
using Row = std::vector<std::string>;

/// A relational database instance: an ordered schema and a set of rows.
///
/// Values are opaque strings compared by exact equality. Duplicate rows are
/// dropped on construction (first occurrence wins, order otherwise kept) and
/// counted in duplicates_removed().
class Relation {
 public:
  /// Throws InputError on an empty schema, duplicate attribute names or rows
  /// whose width differs from the schema.
  Relation(std::vector<std::string> schema, std::vector<Row> rows);
  explicit Relation(std::vector<std::string> schema) : Relation(std::move(schema), {}) {}

  const std::vector<std::string>& schema() const { return schema_; }
  const std::vector<Row>& rows() const { return rows_; }
  std::size_t num_attributes() const { return schema_.size(); }
  std::size_t num_rows() const { return rows_.size(); }
  std::size_t duplicates_removed() const { return duplicates_removed_; }

  const std::string& value(std::size_t row, std::size_t attr) const { return rows_[row][attr]; }

  std::optional<std::size_t> find_attribute(std::string_view name) const;
  /// Throws InputError on unknown names.
  std::size_t attribute(std::string_view name) const;
  AttrSet attribute_set(std::span<const std::string> names) const;
  std::vector<std::string> names_of(const AttrSet& attrs) const;
  AttrSet all_attributes() const { return AttrSet::full(schema_.size()); }

  /// Dense per-column value codes: code(r, a) == code(s, a) iff the values agree.
  std::uint32_t code(std::size_t row, std::size_t attr) const { return codes_[row][attr]; }

  /// Throws InputError if `attrs` leaves the schema.
  void check_attributes(const AttrSet& attrs) const;

  bool operator==(const Relation& other) const { return schema_ == other.schema_ && rows_ == other.rows_; }

 private:
  std::vector<std::string> schema_;
  std::unordered_map<std::string, std::size_t> attr_index_;
  std::vector<Row> rows_;
  std::vector<std::vector<std::uint32_t>> codes_;
  std::size_t duplicates_removed_ = 0;
};

/// X -> a
struct FunctionalDependency {
  AttrSet lhs;
  std::size_t rhs = 0;

  bool is_trivial() const { return lhs.contains(rhs); }
  bool operator==(const FunctionalDependency&) const = default;
  auto operator<=>(const FunctionalDependency& o) const {
    if (auto c = rhs <=> o.rhs; c != 0) return c;
    return lhs <=> o.lhs;
  }
};

/// (X, sigma): attributes lhs[i] of the left relation map to rhs[i] of the
/// right one. Kept sorted by lhs; the identity variant has lhs == rhs.
struct InclusionDependency {
  std::vector<std::size_t> lhs;
  std::vector<std::size_t> rhs;

  static InclusionDependency identity(const AttrSet& attrs);
  /// Sorts the pairs by lhs attribute.
  static InclusionDependency from_pairs(std::vector<std::pair<std::size_t, std::size_t>> pairs);

  std::size_t size() const { return lhs.size(); }
  AttrSet lhs_set() const { return AttrSet(lhs.begin(), lhs.end()); }
  AttrSet rhs_set() const { return AttrSet(rhs.begin(), rhs.end()); }
  bool is_identity() const { return lhs == rhs; }
  /// Total on lhs and injective.
  bool is_well_formed() const;
  /// (X, sigma) <= (X', sigma'): X subset of X' and sigma' restricts to sigma.
  bool precedes_or_equal(const InclusionDependency& other) const;

  bool operator==(const InclusionDependency&) const = default;
  /// Lexicographic by sorted lhs attributes, then by images.
  std::strong_ordering operator<=>(const InclusionDependency& o) const;
};

/// Attributes on which two rows disagree. Throws InputError for identical
/// indices or out-of-range rows.
AttrSet difference_set(const Relation& rel, std::size_t r, std::size_t s);

/// Hypergraph over the schema whose edges are the minimal difference sets.
Hypergraph minimal_difference_sets(const Relation& rel);

/// Vertices: schema without `a`. Edges: the minimized family of D(r,s)\{a}
/// over row pairs with r[a] != s[a]. May contain the empty edge.
Hypergraph punctured_difference_sets(const Relation& rel, std::size_t a);
Hypergraph punctured_difference_sets(const Relation& rel, std::string_view a);

bool is_ucc(const Relation& rel, const AttrSet& attrs);
bool is_valid_fd(const Relation& rel, const FunctionalDependency& fd);
/// r[X] subset of s[sigma(X)] (set semantics). The empty IND always holds.
bool is_ind(const Relation& r, const Relation& s, const InclusionDependency& ind);

}  // namespace depprof
