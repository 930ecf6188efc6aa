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

#include "depprof/discovery.hpp"

#include <algorithm>

#include "depprof/errors.hpp"

namespace depprof {

void require_same_schema(const Relation& r, const Relation& s) {
  if (r.schema() != s.schema()) throw InputError("identity inclusion dependencies need equal schemas");
}

bool detect_ucc(const Relation& rel, std::size_t k) {
  return has_hitting_set_of_size(minimal_difference_sets(rel), k);
}

bool detect_fd_fixed(const Relation& rel, std::size_t rhs, std::size_t k) {
  if (rhs >= rel.num_attributes()) throw InputError("attribute index out of range");
  if (k + 1 > rel.num_attributes()) return false;
  return has_hitting_set_of_size(punctured_difference_sets(rel, rhs), k);
}

bool detect_fd(const Relation& rel, std::size_t k) {
  for (std::size_t a = 0; a < rel.num_attributes(); ++a)
    if (detect_fd_fixed(rel, a, k)) return true;
  return false;
}

namespace {

bool grow_identity(const Relation& r, const Relation& s, AttrSet& current, std::size_t next, std::size_t remaining) {
  if (remaining == 0) return true;
  for (std::size_t a = next; a + remaining <= r.num_attributes(); ++a) {
    current.insert(a);
    const bool ok = is_ind(r, s, InclusionDependency::identity(current)) &&
                    grow_identity(r, s, current, a + 1, remaining - 1);
    current.erase(a);
    if (ok) return true;
  }
  return false;
}

// Partial injection search shared by detection and maximal enumeration.
class InjectionSearch {
 public:
  InjectionSearch(const Relation& r, const Relation& s) : r_(r), s_(s), used_(s.num_attributes(), false) {}

  bool find_of_size(std::size_t k) { return find_from(0, k); }

  void enumerate_maximal(const std::function<bool(const InclusionDependency&)>& visit) {
    visit_ = &visit;
    stopped_ = false;
    explore(0);
  }

 private:
  InclusionDependency current() const { return InclusionDependency::from_pairs(pairs_); }

  bool extend_valid(std::size_t a, std::size_t b) {
    pairs_.emplace_back(a, b);
    const bool ok = is_ind(r_, s_, current());
    pairs_.pop_back();
    return ok;
  }

  bool find_from(std::size_t next, std::size_t remaining) {
    if (remaining == 0) return true;
    for (std::size_t a = next; a + remaining <= r_.num_attributes(); ++a) {
      for (std::size_t b = 0; b < s_.num_attributes(); ++b) {
        if (used_[b] || !extend_valid(a, b)) continue;
        pairs_.emplace_back(a, b);
        used_[b] = true;
        const bool ok = find_from(a + 1, remaining - 1);
        used_[b] = false;
        pairs_.pop_back();
        if (ok) return true;
      }
    }
    return false;
  }

  bool is_maximal() {
    std::vector<bool> in_lhs(r_.num_attributes(), false);
    for (const auto& p : pairs_) in_lhs[p.first] = true;
    for (std::size_t a = 0; a < r_.num_attributes(); ++a) {
      if (in_lhs[a]) continue;
      for (std::size_t b = 0; b < s_.num_attributes(); ++b)
        if (!used_[b] && extend_valid(a, b)) return false;
    }
    return true;
  }

  void explore(std::size_t a) {
    if (stopped_) return;
    if (a == r_.num_attributes()) {
      if (is_maximal() && !(*visit_)(current())) stopped_ = true;
      return;
    }
    for (std::size_t b = 0; b < s_.num_attributes() && !stopped_; ++b) {
      if (used_[b] || !extend_valid(a, b)) continue;
      pairs_.emplace_back(a, b);
      used_[b] = true;
      explore(a + 1);
      used_[b] = false;
      pairs_.pop_back();
    }
    explore(a + 1);
  }

  const Relation& r_;
  const Relation& s_;
  std::vector<bool> used_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
  const std::function<bool(const InclusionDependency&)>* visit_ = nullptr;
  bool stopped_ = false;
};

}  // namespace

bool detect_ind_identity(const Relation& r, const Relation& s, std::size_t k) {
  require_same_schema(r, s);
  if (k > r.num_attributes()) return false;
  AttrSet current;
  return grow_identity(r, s, current, 0, k);
}

bool detect_ind(const Relation& r, const Relation& s, std::size_t k) {
  if (k > std::min(r.num_attributes(), s.num_attributes())) return false;
  InjectionSearch search(r, s);
  return search.find_of_size(k);
}

void DetectionQuery::validate() const {
  if ((kind == DetectionKind::kFdFixedRhs) != fixed_rhs.has_value())
    throw InputError("a fixed right-hand side is required for, and only allowed with, fixed-RHS FD detection");
}

bool run_detection(const DetectionQuery& q, const Relation& r, const Relation* s) {
  q.validate();
  const bool needs_pair = q.kind == DetectionKind::kIndIdentity || q.kind == DetectionKind::kInd;
  if (needs_pair && s == nullptr) throw InputError("inclusion dependency detection needs two relations");
  switch (q.kind) {
    case DetectionKind::kUcc:
      return detect_ucc(r, q.budget);
    case DetectionKind::kFdFixedRhs:
      return detect_fd_fixed(r, r.attribute(*q.fixed_rhs), q.budget);
    case DetectionKind::kFd:
      return detect_fd(r, q.budget);
    case DetectionKind::kIndIdentity:
      return detect_ind_identity(r, *s, q.budget);
    case DetectionKind::kInd:
      return detect_ind(r, *s, q.budget);
  }
  return false;
}

void for_each_minimal_ucc(const Relation& rel, const std::function<bool(const AttrSet&)>& visit) {
  // Vertex i of the difference-set hypergraph is attribute i.
  for_each_minimal_transversal(minimal_difference_sets(rel), visit);
}

std::vector<AttrSet> enumerate_minimal_uccs(const Relation& rel) {
  return minimal_transversals(minimal_difference_sets(rel));
}

void for_each_minimal_fd_fixed(const Relation& rel, std::size_t rhs,
                               const std::function<bool(const FunctionalDependency&)>& visit) {
  const auto punctured = punctured_difference_sets(rel, rhs);
  for_each_minimal_transversal(punctured, [&](const VertexSet& t) {
    FunctionalDependency fd{{}, rhs};
    for (auto v : t) fd.lhs.insert(v < rhs ? v : v + 1);
    return visit(fd);
  });
}

std::vector<FunctionalDependency> enumerate_minimal_fds_fixed(const Relation& rel, std::size_t rhs) {
  std::vector<FunctionalDependency> out;
  for_each_minimal_fd_fixed(rel, rhs, [&](const FunctionalDependency& fd) {
    out.push_back(fd);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

void for_each_minimal_fd(const Relation& rel, const std::function<bool(const FunctionalDependency&)>& visit) {
  bool go = true;
  for (std::size_t a = 0; a < rel.num_attributes() && go; ++a)
    for_each_minimal_fd_fixed(rel, a, [&](const FunctionalDependency& fd) { return go = visit(fd); });
}

std::vector<FunctionalDependency> enumerate_minimal_fds(const Relation& rel) {
  std::vector<FunctionalDependency> out;
  for_each_minimal_fd(rel, [&](const FunctionalDependency& fd) {
    out.push_back(fd);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

NormalizedFormula identity_ind_formula(const Relation& r, const Relation& s) {
  require_same_schema(r, s);
  NormalizedFormula phi(r.schema());
  for (std::size_t l = 0; l < r.num_rows(); ++l) {
    Block block;
    for (std::size_t m = 0; m < s.num_rows(); ++m) {
      IndexSet forbidden;
      for (std::size_t a = 0; a < r.num_attributes(); ++a)
        if (r.value(l, a) != s.value(m, a)) forbidden.insert(a);
      block.push_back(Term::all_negative(forbidden));
    }
    phi.add_block(std::move(block));
  }
  return phi;
}

std::vector<AttrSet> enumerate_maximal_inds_identity(const Relation& r, const Relation& s) {
  require_same_schema(r, s);
  // With rows in r but none in s only the empty IND holds.
  if (s.num_rows() == 0 && r.num_rows() > 0) return {AttrSet{}};
  return maximal_satisfying_assignments(identity_ind_formula(r, s));
}

void for_each_maximal_ind(const Relation& r, const Relation& s,
                          const std::function<bool(const InclusionDependency&)>& visit) {
  InjectionSearch search(r, s);
  search.enumerate_maximal(visit);
}

std::vector<InclusionDependency> enumerate_maximal_inds(const Relation& r, const Relation& s) {
  std::vector<InclusionDependency> out;
  for_each_maximal_ind(r, s, [&](const InclusionDependency& ind) {
    out.push_back(ind);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace depprof
