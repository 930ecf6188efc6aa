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
#include <optional>
#include <string>
#include <vector>

#include "depprof/formula.hpp"
#include "depprof/hypergraph.hpp"
#include "depprof/relation.hpp"

namespace depprof {

// Detection: is there a dependency of exactly k attributes?

bool detect_ucc(const Relation& rel, std::size_t k);
/// X -> a with |X| = k and a not in X. False for k >= |R|.
bool detect_fd_fixed(const Relation& rel, std::size_t rhs, std::size_t k);
bool detect_fd(const Relation& rel, std::size_t k);
/// Throws InputError unless both relations have the same schema.
bool detect_ind_identity(const Relation& r, const Relation& s, std::size_t k);
bool detect_ind(const Relation& r, const Relation& s, std::size_t k);

enum class DetectionKind { kUcc, kFdFixedRhs, kFd, kIndIdentity, kInd };

struct DetectionQuery {
  DetectionKind kind = DetectionKind::kUcc;
  std::size_t budget = 0;
  /// Present iff kind == kFdFixedRhs.
  std::optional<std::string> fixed_rhs;

  /// Throws InputError if fixed_rhs presence does not match the kind.
  void validate() const;
};

/// Dispatches a query; `s` is required for the IND kinds and ignored otherwise.
bool run_detection(const DetectionQuery& q, const Relation& r, const Relation* s = nullptr);

// Enumeration. The for_each_* variants stream in search order and stop when
// the visitor returns false; the plain variants return sorted vectors.

void for_each_minimal_ucc(const Relation& rel, const std::function<bool(const AttrSet&)>& visit);
std::vector<AttrSet> enumerate_minimal_uccs(const Relation& rel);

void for_each_minimal_fd_fixed(const Relation& rel, std::size_t rhs,
                               const std::function<bool(const FunctionalDependency&)>& visit);
std::vector<FunctionalDependency> enumerate_minimal_fds_fixed(const Relation& rel, std::size_t rhs);

/// All minimal, valid, non-trivial FDs, by right-hand side in schema order.
void for_each_minimal_fd(const Relation& rel, const std::function<bool(const FunctionalDependency&)>& visit);
std::vector<FunctionalDependency> enumerate_minimal_fds(const Relation& rel);

/// The identity-variable formula: one block per row of r, one term per row of
/// s, term = attributes where the two rows disagree. Variables are named after
/// the attributes. Shared schema required.
NormalizedFormula identity_ind_formula(const Relation& r, const Relation& s);

/// Maximal identity INDs as attribute sets, via maximal satisfying
/// assignments of identity_ind_formula.
std::vector<AttrSet> enumerate_maximal_inds_identity(const Relation& r, const Relation& s);

/// Maximal (X, sigma) by depth-first search over partial injections,
/// pruning partial mappings that are already violated. Two results may share
/// X with different sigma.
void for_each_maximal_ind(const Relation& r, const Relation& s,
                          const std::function<bool(const InclusionDependency&)>& visit);
std::vector<InclusionDependency> enumerate_maximal_inds(const Relation& r, const Relation& s);

/// Throws InputError when the schemas differ.
void require_same_schema(const Relation& r, const Relation& s);

}  // namespace depprof
