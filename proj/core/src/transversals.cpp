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

// Minimal hitting set enumeration in the style of MMCS (Murakami & Uno).
//
// The search keeps a partial solution S, a candidate set CAND and, for every
// edge, the number of S-vertices hitting it. An edge hit exactly once is
// "critical" for its single hitter; S can only grow into a minimal
// transversal if every vertex of S stays critical for at least one edge.
// Memory is linear in the input plus O(|V|) recursion frames.

#include <algorithm>
#include <limits>

#include "depprof/hypergraph.hpp"

namespace depprof {
namespace {

class MinimalTransversalSearch {
 public:
  MinimalTransversalSearch(const Hypergraph& h, const TransversalVisitor& visit)
      : edges_(h.edges()),
        visit_(visit),
        incidence_(h.num_vertices()),
        hit_count_(edges_.size(), 0),
        owner_(edges_.size(), 0),
        crit_count_(h.num_vertices(), 0) {
    for (std::size_t e = 0; e < edges_.size(); ++e)
      for (auto v : edges_[e]) incidence_[v].push_back(e);
  }

  bool run(std::size_t n) {
    if (std::any_of(edges_.begin(), edges_.end(), [](const auto& e) { return e.empty(); })) return true;
    VertexSet cand = VertexSet::full(n);
    return recurse(cand);
  }

 private:
  bool recurse(VertexSet& cand) {
    // Pick the unhit edge with the fewest remaining candidates.
    std::size_t best = kNone;
    std::size_t best_size = std::numeric_limits<std::size_t>::max();
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      if (hit_count_[e] != 0) continue;
      const auto c = edges_[e].intersection_size(cand);
      if (c < best_size) {
        best = e;
        best_size = c;
        if (c == 0) break;
      }
    }
    if (best == kNone) return visit_(solution_);
    if (best_size == 0) return true;

    const VertexSet branch = edges_[best] & cand;
    cand -= branch;
    bool keep_going = true;
    for (auto v : branch) {
      add(v);
      if (all_critical()) keep_going = recurse(cand);
      remove(v);
      cand.insert(v);
      if (!keep_going) break;
    }
    if (!keep_going) cand |= branch;
    return keep_going;
  }

  void add(std::size_t v) {
    solution_.insert(v);
    members_.push_back(v);
    for (auto e : incidence_[v]) {
      if (hit_count_[e] == 0) {
        owner_[e] = v;
        ++crit_count_[v];
      } else if (hit_count_[e] == 1) {
        --crit_count_[owner_[e]];
      }
      ++hit_count_[e];
    }
  }

  // Exact inverse of add() under LIFO order; owner_[e] is still valid for
  // edges that drop back to a single hitter.
  void remove(std::size_t v) {
    for (auto e : incidence_[v]) {
      --hit_count_[e];
      if (hit_count_[e] == 0) {
        --crit_count_[v];
      } else if (hit_count_[e] == 1) {
        ++crit_count_[owner_[e]];
      }
    }
    members_.pop_back();
    solution_.erase(v);
  }

  bool all_critical() const {
    return std::all_of(members_.begin(), members_.end(), [&](std::size_t u) { return crit_count_[u] > 0; });
  }

  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  const std::vector<VertexSet>& edges_;
  const TransversalVisitor& visit_;
  std::vector<std::vector<std::size_t>> incidence_;
  std::vector<std::size_t> hit_count_;
  std::vector<std::size_t> owner_;
  std::vector<std::size_t> crit_count_;
  VertexSet solution_;
  std::vector<std::size_t> members_;
};

}  // namespace

bool for_each_minimal_transversal(const Hypergraph& h, const TransversalVisitor& visit) {
  MinimalTransversalSearch search(h, visit);
  return search.run(h.num_vertices());
}

std::vector<VertexSet> minimal_transversals(const Hypergraph& h) {
  std::vector<VertexSet> out;
  for_each_minimal_transversal(h, [&](const VertexSet& t) {
    out.push_back(t);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace depprof
