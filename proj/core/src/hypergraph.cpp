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

#include "depprof/hypergraph.hpp"

#include <algorithm>

#include "depprof/errors.hpp"

namespace depprof {

Hypergraph::Hypergraph(std::vector<std::string> vertices) {
  for (auto& v : vertices) {
    if (vertex_index_.contains(v)) throw InputError("duplicate vertex name '" + v + "'");
    add_vertex(v);
  }
}

Hypergraph Hypergraph::from_names(const std::vector<std::vector<std::string>>& edges,
                                  const std::vector<std::string>& vertices) {
  Hypergraph h(vertices);
  for (const auto& e : edges) h.add_edge_by_names(e);
  return h;
}

std::size_t Hypergraph::add_vertex(std::string_view name) {
  std::string key(name);
  if (auto it = vertex_index_.find(key); it != vertex_index_.end()) return it->second;
  const auto idx = vertices_.size();
  vertices_.push_back(key);
  vertex_index_.emplace(std::move(key), idx);
  return idx;
}

bool Hypergraph::add_edge(VertexSet edge) {
  if (edge.bound() > vertices_.size())
    throw InputError("edge " + edge.to_string() + " is not a subset of the vertex universe");
  if (!edge_index_.insert(edge).second) return false;
  edges_.push_back(std::move(edge));
  return true;
}

bool Hypergraph::add_edge_by_names(std::span<const std::string> names) {
  VertexSet e;
  for (const auto& n : names) e.insert(add_vertex(n));
  return add_edge(std::move(e));
}

std::optional<std::size_t> Hypergraph::find_vertex(std::string_view name) const {
  if (auto it = vertex_index_.find(std::string(name)); it != vertex_index_.end()) return it->second;
  return std::nullopt;
}

VertexSet Hypergraph::vertex_set(std::span<const std::string> names) const {
  VertexSet s;
  for (const auto& n : names) {
    auto idx = find_vertex(n);
    if (!idx) throw InputError("unknown vertex '" + n + "'");
    s.insert(*idx);
  }
  return s;
}

std::vector<std::string> Hypergraph::names_of(const VertexSet& s) const {
  std::vector<std::string> out;
  for (auto i : s) {
    if (i >= vertices_.size()) throw InputError("vertex index " + std::to_string(i) + " out of range");
    out.push_back(vertices_[i]);
  }
  return out;
}

bool Hypergraph::is_sperner() const {
  for (std::size_t i = 0; i < edges_.size(); ++i)
    for (std::size_t j = 0; j < edges_.size(); ++j)
      if (i != j && edges_[i].is_subset_of(edges_[j])) return false;
  return true;
}

VertexSet Hypergraph::isolated_vertices() const {
  VertexSet covered;
  for (const auto& e : edges_) covered |= e;
  return covered.complement(vertices_.size());
}

std::vector<VertexSet> Hypergraph::sorted_edges() const {
  auto out = edges_;
  std::sort(out.begin(), out.end());
  return out;
}

bool same_family(const Hypergraph& a, const Hypergraph& b) {
  return a.vertices() == b.vertices() && a.sorted_edges() == b.sorted_edges();
}

Hypergraph minimize(const Hypergraph& h) {
  Hypergraph out(h.vertices());
  const auto& edges = h.edges();
  // Check candidates by increasing size so each comparison is against edges
  // that could possibly be strictly smaller.
  std::vector<std::size_t> order(edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return edges[a].size() < edges[b].size(); });
  std::vector<bool> keep(edges.size(), false);
  std::vector<std::size_t> kept;
  for (auto i : order) {
    bool dominated = false;
    for (auto j : kept)
      if (edges[j].is_subset_of(edges[i])) {
        dominated = true;
        break;
      }
    if (!dominated) {
      keep[i] = true;
      kept.push_back(i);
    }
  }
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (keep[i]) out.add_edge(edges[i]);
  return out;
}

bool is_hitting_set(const Hypergraph& h, const VertexSet& t) {
  if (t.bound() > h.num_vertices())
    throw InputError("candidate " + t.to_string() + " contains a vertex outside the universe");
  for (const auto& e : h.edges())
    if (!e.intersects(t)) return false;
  return true;
}

namespace {

// Bounded search tree: branch on the vertices of some unhit edge.
bool hit_within(const std::vector<VertexSet>& edges, VertexSet& chosen, std::size_t budget) {
  const VertexSet* unhit = nullptr;
  for (const auto& e : edges)
    if (!e.intersects(chosen)) {
      if (unhit == nullptr || e.size() < unhit->size()) unhit = &e;
    }
  if (unhit == nullptr) return true;
  if (budget == 0) return false;
  for (auto v : *unhit) {
    chosen.insert(v);
    const bool ok = hit_within(edges, chosen, budget - 1);
    chosen.erase(v);
    if (ok) return true;
  }
  return false;
}

}  // namespace

bool has_hitting_set_of_size(const Hypergraph& h, std::size_t k) {
  if (k > h.num_vertices()) return false;
  if (h.has_empty_edge()) return false;
  // Hitting sets are upward closed inside V, so "exactly k" == "at most k".
  const auto minimal = minimize(h);
  VertexSet chosen;
  return hit_within(minimal.edges(), chosen, k);
}

Hypergraph transversal_hypergraph(const Hypergraph& h) {
  Hypergraph out(h.vertices());
  for (auto& t : minimal_transversals(h)) out.add_edge(std::move(t));
  return out;
}

std::vector<VertexSet> brute_force_minimal_transversals(const Hypergraph& h, std::size_t max_vertices) {
  const auto n = h.num_vertices();
  if (n > max_vertices || n >= 63)
    throw RefusalError("brute-force transversal oracle refuses " + std::to_string(n) +
                       " vertices (bound " + std::to_string(max_vertices) + ")");
  std::vector<VertexSet> out;
  const std::uint64_t limit = std::uint64_t{1} << n;
  auto hits = [&](std::uint64_t mask) {
    for (const auto& e : h.edges()) {
      const auto w = e.words().empty() ? std::uint64_t{0} : e.words()[0];
      if ((w & mask) == 0) return false;
    }
    return true;
  };
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    if (!hits(mask)) continue;
    bool minimal = true;
    for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
      const auto bit = rest & (~rest + 1);
      if (hits(mask & ~bit)) {
        minimal = false;
        break;
      }
    }
    if (!minimal) continue;
    VertexSet s;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1U) s.insert(i);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Hypergraph> pad_to_common_universe(const std::vector<Hypergraph>& hs) {
  std::vector<std::string> universe;
  std::unordered_set<std::string> seen;
  for (const auto& h : hs)
    for (const auto& v : h.vertices())
      if (seen.insert(v).second) universe.push_back(v);
  std::vector<Hypergraph> out;
  out.reserve(hs.size());
  for (const auto& h : hs) {
    Hypergraph padded(universe);
    for (const auto& e : h.edges()) padded.add_edge(padded.vertex_set(h.names_of(e)));
    out.push_back(std::move(padded));
  }
  return out;
}

bool for_each_transversal_union(const std::vector<Hypergraph>& hs,
                                const std::function<bool(const TaggedTransversal&)>& visit) {
  if (hs.empty()) throw InputError("transversal union needs at least one hypergraph");
  const auto padded = pad_to_common_universe(hs);
  for (std::size_t i = 0; i < padded.size(); ++i) {
    const bool completed = for_each_minimal_transversal(padded[i], [&](const VertexSet& t) {
      return visit(TaggedTransversal{t, i});
    });
    if (!completed) return false;
  }
  return true;
}

std::vector<TaggedTransversal> transversal_union(const std::vector<Hypergraph>& hs) {
  std::vector<TaggedTransversal> out;
  for_each_transversal_union(hs, [&](const TaggedTransversal& t) {
    out.push_back(t);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace depprof
