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
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "depprof/index_set.hpp"

namespace depprof {

using VertexSet = IndexSet;

/// A finite vertex universe together with a family of vertex subsets.
///
/// Vertices are named and ordered by first appearance. Duplicate edges are
/// collapsed on insertion; the empty edge and isolated vertices are allowed.
class Hypergraph {
 public:
  Hypergraph() = default;
  explicit Hypergraph(std::vector<std::string> vertices);

  /// Builds a hypergraph from edges given by vertex names. Vertices listed in
  /// `vertices` come first (in that order), then any new names from the edges.
  static Hypergraph from_names(const std::vector<std::vector<std::string>>& edges,
                               const std::vector<std::string>& vertices = {});

  /// Returns the index of `name`, appending it when new.
  std::size_t add_vertex(std::string_view name);
  /// Adds an edge; returns false if it was already present.
  bool add_edge(VertexSet edge);
  bool add_edge_by_names(std::span<const std::string> names);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<VertexSet>& edges() const { return edges_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  std::optional<std::size_t> find_vertex(std::string_view name) const;
  /// Throws InputError on unknown names.
  VertexSet vertex_set(std::span<const std::string> names) const;
  std::vector<std::string> names_of(const VertexSet& s) const;

  bool contains_edge(const VertexSet& e) const { return edge_index_.contains(e); }
  bool has_empty_edge() const { return edge_index_.contains(VertexSet{}); }
  bool is_sperner() const;
  /// Vertices that lie in no edge.
  VertexSet isolated_vertices() const;

  /// Edge families sorted canonically, for order-insensitive comparison.
  std::vector<VertexSet> sorted_edges() const;

  /// Exact equality: same vertex order and same edge order.
  bool operator==(const Hypergraph& other) const {
    return vertices_ == other.vertices_ && edges_ == other.edges_;
  }

 private:
  std::vector<std::string> vertices_;
  std::unordered_map<std::string, std::size_t> vertex_index_;
  std::vector<VertexSet> edges_;
  std::unordered_set<VertexSet> edge_index_;
};

/// Same vertex universe (as ordered lists) and same edge family as sets.
bool same_family(const Hypergraph& a, const Hypergraph& b);

/// The inclusion-wise minimal edges, in their original order.
Hypergraph minimize(const Hypergraph& h);

/// Whether `t` meets every edge. Vacuously true without edges; always false if
/// the empty edge is present. Throws InputError if `t` leaves the universe.
bool is_hitting_set(const Hypergraph& h, const VertexSet& t);

/// Whether some hitting set has exactly k vertices. False for k > |V|.
bool has_hitting_set_of_size(const Hypergraph& h, std::size_t k);

/// Callback receives each minimal transversal; return false to stop early.
using TransversalVisitor = std::function<bool(const VertexSet&)>;

/// Streams Tr(h) by depth-first minimal-hitting-set search with per-vertex
/// critical-edge witnesses (MMCS). Each set is emitted once, in a fixed order.
/// Returns false if the visitor stopped the enumeration.
bool for_each_minimal_transversal(const Hypergraph& h, const TransversalVisitor& visit);

/// Tr(h), sorted canonically.
std::vector<VertexSet> minimal_transversals(const Hypergraph& h);

/// Tr(h) as a hypergraph over the same vertex list.
Hypergraph transversal_hypergraph(const Hypergraph& h);

inline constexpr std::size_t kDefaultOracleVertexBound = 20;

/// Exhaustive reference for Tr(h): tests every vertex subset. Refuses
/// (RefusalError) when the universe exceeds `max_vertices`.
std::vector<VertexSet> brute_force_minimal_transversals(const Hypergraph& h,
                                                        std::size_t max_vertices = kDefaultOracleVertexBound);

struct TaggedTransversal {
  VertexSet vertex_set;
  std::size_t source_index = 0;

  bool operator==(const TaggedTransversal&) const = default;
  auto operator<=>(const TaggedTransversal& o) const {
    if (auto c = source_index <=> o.source_index; c != 0) return c;
    return vertex_set <=> o.vertex_set;
  }
};

/// Re-expresses every hypergraph over the union of all vertex names (ordered
/// by first appearance across the list), padding with isolated vertices.
std::vector<Hypergraph> pad_to_common_universe(const std::vector<Hypergraph>& hs);

/// Streams the disjoint union Tr(hs[0]) + ... + Tr(hs[d-1]) with source tags.
/// Inputs with differing universes are padded first; vertex indices in the
/// emitted sets refer to the padded universe. Throws InputError on an empty list.
bool for_each_transversal_union(const std::vector<Hypergraph>& hs,
                                const std::function<bool(const TaggedTransversal&)>& visit);
std::vector<TaggedTransversal> transversal_union(const std::vector<Hypergraph>& hs);

}  // namespace depprof
