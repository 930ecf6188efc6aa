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

#include "depprof/relation.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "depprof/errors.hpp"

namespace depprof {
namespace {

struct RowHash {
  std::size_t operator()(const Row& row) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (const auto& v : row) {
      h ^= std::hash<std::string>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

struct CodeRowHash {
  std::size_t operator()(const std::vector<std::uint32_t>& row) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto v : row) {
      h ^= v;
      h *= 0x100000001b3ULL;
    }
    return h;
  }
};

std::vector<std::uint32_t> project_codes(const Relation& rel, std::size_t row, const AttrSet& attrs) {
  std::vector<std::uint32_t> out;
  for (auto a : attrs) out.push_back(rel.code(row, a));
  return out;
}

}  // namespace

Relation::Relation(std::vector<std::string> schema, std::vector<Row> rows) : schema_(std::move(schema)) {
  if (schema_.empty()) throw InputError("relation schema must not be empty");
  for (std::size_t i = 0; i < schema_.size(); ++i)
    if (!attr_index_.emplace(schema_[i], i).second)
      throw InputError("duplicate attribute name '" + schema_[i] + "'");

  std::unordered_set<Row, RowHash> seen;
  for (auto& row : rows) {
    if (row.size() != schema_.size())
      throw InputError("row has " + std::to_string(row.size()) + " values, schema has " +
                       std::to_string(schema_.size()) + " attributes");
    if (!seen.insert(row).second) {
      ++duplicates_removed_;
      continue;
    }
    rows_.push_back(std::move(row));
  }

  std::vector<std::unordered_map<std::string, std::uint32_t>> dictionaries(schema_.size());
  codes_.reserve(rows_.size());
  for (const auto& row : rows_) {
    std::vector<std::uint32_t> coded(schema_.size());
    for (std::size_t a = 0; a < schema_.size(); ++a) {
      auto& dict = dictionaries[a];
      coded[a] = dict.emplace(row[a], static_cast<std::uint32_t>(dict.size())).first->second;
    }
    codes_.push_back(std::move(coded));
  }
}

std::optional<std::size_t> Relation::find_attribute(std::string_view name) const {
  if (auto it = attr_index_.find(std::string(name)); it != attr_index_.end()) return it->second;
  return std::nullopt;
}

std::size_t Relation::attribute(std::string_view name) const {
  if (auto idx = find_attribute(name)) return *idx;
  throw InputError("unknown attribute '" + std::string(name) + "'");
}

AttrSet Relation::attribute_set(std::span<const std::string> names) const {
  AttrSet s;
  for (const auto& n : names) s.insert(attribute(n));
  return s;
}

std::vector<std::string> Relation::names_of(const AttrSet& attrs) const {
  check_attributes(attrs);
  std::vector<std::string> out;
  for (auto a : attrs) out.push_back(schema_[a]);
  return out;
}

void Relation::check_attributes(const AttrSet& attrs) const {
  if (attrs.bound() > schema_.size())
    throw InputError("attribute set " + attrs.to_string() + " leaves the schema");
}

InclusionDependency InclusionDependency::identity(const AttrSet& attrs) {
  InclusionDependency ind;
  ind.lhs = attrs.to_vector();
  ind.rhs = ind.lhs;
  return ind;
}

InclusionDependency InclusionDependency::from_pairs(std::vector<std::pair<std::size_t, std::size_t>> pairs) {
  std::sort(pairs.begin(), pairs.end());
  InclusionDependency ind;
  for (auto [a, b] : pairs) {
    ind.lhs.push_back(a);
    ind.rhs.push_back(b);
  }
  return ind;
}

bool InclusionDependency::is_well_formed() const {
  if (lhs.size() != rhs.size()) return false;
  if (!std::is_sorted(lhs.begin(), lhs.end()) || std::adjacent_find(lhs.begin(), lhs.end()) != lhs.end())
    return false;
  std::set<std::size_t> images(rhs.begin(), rhs.end());
  return images.size() == rhs.size();
}

bool InclusionDependency::precedes_or_equal(const InclusionDependency& other) const {
  std::size_t j = 0;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    while (j < other.lhs.size() && other.lhs[j] < lhs[i]) ++j;
    if (j == other.lhs.size() || other.lhs[j] != lhs[i] || other.rhs[j] != rhs[i]) return false;
  }
  return true;
}

std::strong_ordering InclusionDependency::operator<=>(const InclusionDependency& o) const {
  if (auto c = lhs <=> o.lhs; c != 0) return c;
  return rhs <=> o.rhs;
}

AttrSet difference_set(const Relation& rel, std::size_t r, std::size_t s) {
  if (r >= rel.num_rows() || s >= rel.num_rows()) throw InputError("row index out of range");
  if (r == s) throw InputError("difference set needs two distinct rows");
  AttrSet d;
  for (std::size_t a = 0; a < rel.num_attributes(); ++a)
    if (rel.code(r, a) != rel.code(s, a)) d.insert(a);
  return d;
}

Hypergraph minimal_difference_sets(const Relation& rel) {
  std::unordered_set<AttrSet> seen;
  std::vector<AttrSet> family;
  for (std::size_t r = 0; r < rel.num_rows(); ++r)
    for (std::size_t s = r + 1; s < rel.num_rows(); ++s) {
      auto d = difference_set(rel, r, s);
      if (seen.insert(d).second) family.push_back(std::move(d));
    }
  Hypergraph h(rel.schema());
  for (auto& e : family) h.add_edge(std::move(e));
  return minimize(h);
}

Hypergraph punctured_difference_sets(const Relation& rel, std::size_t a) {
  if (a >= rel.num_attributes()) throw InputError("attribute index out of range");
  // Vertex i of the result is attribute i for i < a and attribute i+1 above.
  std::vector<std::string> vertices;
  for (std::size_t b = 0; b < rel.num_attributes(); ++b)
    if (b != a) vertices.push_back(rel.schema()[b]);
  Hypergraph h(std::move(vertices));
  for (std::size_t r = 0; r < rel.num_rows(); ++r)
    for (std::size_t s = r + 1; s < rel.num_rows(); ++s) {
      if (rel.code(r, a) == rel.code(s, a)) continue;
      VertexSet e;
      for (std::size_t b = 0; b < rel.num_attributes(); ++b)
        if (b != a && rel.code(r, b) != rel.code(s, b)) e.insert(b < a ? b : b - 1);
      h.add_edge(std::move(e));
    }
  return minimize(h);
}

Hypergraph punctured_difference_sets(const Relation& rel, std::string_view a) {
  return punctured_difference_sets(rel, rel.attribute(a));
}

bool is_ucc(const Relation& rel, const AttrSet& attrs) {
  rel.check_attributes(attrs);
  std::unordered_set<std::vector<std::uint32_t>, CodeRowHash> seen;
  for (std::size_t r = 0; r < rel.num_rows(); ++r)
    if (!seen.insert(project_codes(rel, r, attrs)).second) return false;
  return true;
}

bool is_valid_fd(const Relation& rel, const FunctionalDependency& fd) {
  rel.check_attributes(fd.lhs);
  if (fd.rhs >= rel.num_attributes()) throw InputError("FD right-hand side leaves the schema");
  if (fd.is_trivial()) return true;
  std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, CodeRowHash> image;
  for (std::size_t r = 0; r < rel.num_rows(); ++r) {
    auto [it, inserted] = image.emplace(project_codes(rel, r, fd.lhs), rel.code(r, fd.rhs));
    if (!inserted && it->second != rel.code(r, fd.rhs)) return false;
  }
  return true;
}

bool is_ind(const Relation& r, const Relation& s, const InclusionDependency& ind) {
  if (ind.lhs.size() != ind.rhs.size()) throw InputError("IND mapping is not total on its left-hand side");
  if (!ind.is_well_formed()) throw InputError("IND mapping is not injective");
  for (auto a : ind.lhs)
    if (a >= r.num_attributes()) throw InputError("IND left-hand side leaves the schema");
  for (auto b : ind.rhs)
    if (b >= s.num_attributes()) throw InputError("IND image leaves the target schema");
  if (ind.lhs.empty()) return true;

  std::unordered_set<Row, RowHash> targets;
  for (std::size_t m = 0; m < s.num_rows(); ++m) {
    Row projected;
    for (auto b : ind.rhs) projected.push_back(s.value(m, b));
    targets.insert(std::move(projected));
  }
  for (std::size_t l = 0; l < r.num_rows(); ++l) {
    Row projected;
    for (auto a : ind.lhs) projected.push_back(r.value(l, a));
    if (!targets.contains(projected)) return false;
  }
  return true;
}

}  // namespace depprof
