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

#include "depprof/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <string>

#include "depprof/errors.hpp"

namespace depprof {
namespace {

using Mask = std::uint64_t;

constexpr std::size_t kHardMaskLimit = 30;

IndexSet from_mask(Mask m) {
  IndexSet s;
  for (std::size_t i = 0; m; ++i, m >>= 1)
    if (m & 1) s.insert(i);
  return s;
}

std::vector<bool> table(std::size_t n, const std::function<bool(Mask)>& pred) {
  std::vector<bool> out(Mask{1} << n);
  for (Mask m = 0; m < out.size(); ++m) out[m] = pred(m);
  return out;
}

// Sets m where pred holds and fails for every one-element removal.
std::vector<IndexSet> minimal_of(std::size_t n, const std::vector<bool>& valid, Mask forbidden = 0) {
  std::vector<IndexSet> out;
  for (Mask m = 0; m < valid.size(); ++m) {
    if (!valid[m] || (m & forbidden)) continue;
    bool minimal = true;
    for (std::size_t i = 0; i < n && minimal; ++i)
      if ((m >> i & 1) && valid[m & ~(Mask{1} << i)]) minimal = false;
    if (minimal) out.push_back(from_mask(m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Sets m where pred holds and no proper superset satisfies it.
std::vector<IndexSet> maximal_of(std::size_t n, const std::vector<bool>& valid) {
  std::vector<bool> up = valid;
  for (Mask m = up.size(); m-- > 0;)
    for (std::size_t i = 0; i < n && !up[m]; ++i)
      if (!(m >> i & 1) && up[m | Mask{1} << i]) up[m] = true;
  std::vector<IndexSet> out;
  for (Mask m = 0; m < valid.size(); ++m) {
    if (!valid[m]) continue;
    bool maximal = true;
    for (std::size_t i = 0; i < n && maximal; ++i)
      if (!(m >> i & 1) && up[m | Mask{1} << i]) maximal = false;
    if (maximal) out.push_back(from_mask(m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t width(std::size_t bound) { return std::min(bound, kHardMaskLimit); }

void check_relation(const Relation& rel, const OracleBounds& b) {
  check_oracle_bound("attributes", rel.num_attributes(), width(b.max_attributes));
  check_oracle_bound("rows", rel.num_rows(), b.max_rows);
}

// Every partial injection from r's attributes into s's attributes.
void for_each_partial_injection(std::size_t nr, std::size_t ns,
                                const std::function<void(const std::vector<std::pair<std::size_t, std::size_t>>&)>& f) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<bool> used(ns, false);
  std::function<void(std::size_t)> rec = [&](std::size_t a) {
    if (a == nr) {
      f(pairs);
      return;
    }
    rec(a + 1);
    for (std::size_t b = 0; b < ns; ++b) {
      if (used[b]) continue;
      used[b] = true;
      pairs.emplace_back(a, b);
      rec(a + 1);
      pairs.pop_back();
      used[b] = false;
    }
  };
  rec(0);
}

}  // namespace

void check_oracle_bound(const char* what, std::size_t count, std::size_t bound) {
  if (count > bound)
    throw RefusalError(std::string("brute force refused: ") + std::to_string(count) + " " + what +
                       " exceeds the oracle bound of " + std::to_string(bound));
}

std::vector<AttrSet> oracle_minimal_uccs(const Relation& rel, const OracleBounds& b) {
  check_relation(rel, b);
  const auto n = rel.num_attributes();
  return minimal_of(n, table(n, [&](Mask m) { return is_ucc(rel, from_mask(m)); }));
}

std::vector<FunctionalDependency> oracle_minimal_fds_fixed(const Relation& rel, std::size_t rhs, const OracleBounds& b) {
  check_relation(rel, b);
  if (rhs >= rel.num_attributes()) throw InputError("attribute index out of range");
  const auto n = rel.num_attributes();
  const Mask self = Mask{1} << rhs;
  const auto valid = table(n, [&](Mask m) { return !(m & self) && is_valid_fd(rel, {from_mask(m), rhs}); });
  std::vector<FunctionalDependency> out;
  for (auto& lhs : minimal_of(n, valid, self)) out.push_back({std::move(lhs), rhs});
  return out;
}

std::vector<FunctionalDependency> oracle_minimal_fds(const Relation& rel, const OracleBounds& b) {
  std::vector<FunctionalDependency> out;
  for (std::size_t a = 0; a < rel.num_attributes(); ++a) {
    auto part = oracle_minimal_fds_fixed(rel, a, b);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<bool> oracle_fd_sizes(const Relation& rel, const OracleBounds& b) {
  check_relation(rel, b);
  const auto n = rel.num_attributes();
  std::vector<bool> sizes(n + 1, false);
  for (std::size_t a = 0; a < n; ++a)
    for (Mask m = 0; m < (Mask{1} << n); ++m)
      if (!(m >> a & 1) && is_valid_fd(rel, {from_mask(m), a})) sizes[std::popcount(m)] = true;
  return sizes;
}

std::vector<AttrSet> oracle_identity_inds(const Relation& r, const Relation& s, const OracleBounds& b) {
  check_relation(r, b);
  check_relation(s, b);
  if (r.schema() != s.schema()) throw InputError("identity inclusion dependencies need equal schemas");
  std::vector<AttrSet> out;
  for (Mask m = 0; m < (Mask{1} << r.num_attributes()); ++m)
    if (is_ind(r, s, InclusionDependency::identity(from_mask(m)))) out.push_back(from_mask(m));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AttrSet> oracle_maximal_identity_inds(const Relation& r, const Relation& s, const OracleBounds& b) {
  check_relation(r, b);
  check_relation(s, b);
  if (r.schema() != s.schema()) throw InputError("identity inclusion dependencies need equal schemas");
  const auto n = r.num_attributes();
  return maximal_of(n, table(n, [&](Mask m) { return is_ind(r, s, InclusionDependency::identity(from_mask(m))); }));
}

std::vector<InclusionDependency> oracle_inds(const Relation& r, const Relation& s, const OracleBounds& b) {
  check_relation(r, b);
  check_relation(s, b);
  std::vector<InclusionDependency> out;
  for_each_partial_injection(r.num_attributes(), s.num_attributes(), [&](const auto& pairs) {
    auto ind = InclusionDependency::from_pairs(pairs);
    if (is_ind(r, s, ind)) out.push_back(std::move(ind));
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<InclusionDependency> oracle_maximal_inds(const Relation& r, const Relation& s, const OracleBounds& b) {
  std::vector<InclusionDependency> out;
  for (const auto& ind : oracle_inds(r, s, b)) {
    std::vector<bool> used_r(r.num_attributes(), false), used_s(s.num_attributes(), false);
    for (std::size_t i = 0; i < ind.size(); ++i) used_r[ind.lhs[i]] = used_s[ind.rhs[i]] = true;
    bool maximal = true;
    for (std::size_t a = 0; a < r.num_attributes() && maximal; ++a) {
      if (used_r[a]) continue;
      for (std::size_t c = 0; c < s.num_attributes() && maximal; ++c) {
        if (used_s[c]) continue;
        std::vector<std::pair<std::size_t, std::size_t>> pairs{{a, c}};
        for (std::size_t i = 0; i < ind.size(); ++i) pairs.emplace_back(ind.lhs[i], ind.rhs[i]);
        if (is_ind(r, s, InclusionDependency::from_pairs(std::move(pairs)))) maximal = false;
      }
    }
    if (maximal) out.push_back(ind);
  }
  return out;
}

std::vector<Assignment> oracle_satisfying_assignments(const NormalizedFormula& phi, const OracleBounds& b) {
  check_oracle_bound("variables", phi.num_variables(), width(b.max_variables));
  std::vector<Assignment> out;
  for (Mask m = 0; m < (Mask{1} << phi.num_variables()); ++m)
    if (evaluate(phi, from_mask(m))) out.push_back(from_mask(m));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Assignment> oracle_maximal_satisfying_assignments(const NormalizedFormula& phi, const OracleBounds& b) {
  check_oracle_bound("variables", phi.num_variables(), width(b.max_variables));
  const auto n = phi.num_variables();
  return maximal_of(n, table(n, [&](Mask m) { return evaluate(phi, from_mask(m)); }));
}

std::vector<bool> oracle_sat_weights(const NormalizedFormula& phi, const OracleBounds& b) {
  check_oracle_bound("variables", phi.num_variables(), width(b.max_variables));
  std::vector<bool> weights(phi.num_variables() + 1, false);
  for (Mask m = 0; m < (Mask{1} << phi.num_variables()); ++m)
    if (!weights[std::popcount(m)] && evaluate(phi, from_mask(m))) weights[std::popcount(m)] = true;
  return weights;
}

std::vector<VertexSet> oracle_minimal_transversals(const Hypergraph& h, const OracleBounds& b) {
  check_oracle_bound("vertices", h.num_vertices(), width(b.max_attributes));
  const auto n = h.num_vertices();
  return minimal_of(n, table(n, [&](Mask m) {
                      const auto t = from_mask(m);
                      return std::all_of(h.edges().begin(), h.edges().end(),
                                         [&](const VertexSet& e) { return e.intersects(t); });
                    }));
}

std::vector<TaggedTransversal> oracle_transversal_union(const std::vector<Hypergraph>& hs, const OracleBounds& b) {
  if (hs.empty()) throw InputError("hypergraph list is empty");
  std::vector<TaggedTransversal> out;
  const auto padded = pad_to_common_universe(hs);
  for (std::size_t i = 0; i < padded.size(); ++i)
    for (auto& t : oracle_minimal_transversals(padded[i], b)) out.push_back({std::move(t), i});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace depprof
