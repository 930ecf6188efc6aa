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
#include <vector>

#include "depprof/formula.hpp"
#include "depprof/hypergraph.hpp"
#include "depprof/relation.hpp"

// Exhaustive reference enumerators. They test definitions directly (row
// projections, formula evaluation) and never use difference sets or the
// transversal enumerator. Results are sorted.

namespace depprof {

struct OracleBounds {
  std::size_t max_variables = 12;
  std::size_t max_attributes = 7;
  std::size_t max_rows = 10;
};

/// Throws RefusalError when `count` exceeds `bound`.
void check_oracle_bound(const char* what, std::size_t count, std::size_t bound);

std::vector<AttrSet> oracle_minimal_uccs(const Relation& rel, const OracleBounds& b = {});
/// Minimal valid non-trivial FDs.
std::vector<FunctionalDependency> oracle_minimal_fds(const Relation& rel, const OracleBounds& b = {});
std::vector<FunctionalDependency> oracle_minimal_fds_fixed(const Relation& rel, std::size_t rhs,
                                                           const OracleBounds& b = {});
/// Sizes k for which some valid non-trivial FD with |X| = k exists.
std::vector<bool> oracle_fd_sizes(const Relation& rel, const OracleBounds& b = {});

/// Every valid identity IND, as attribute sets (the empty set always holds).
std::vector<AttrSet> oracle_identity_inds(const Relation& r, const Relation& s, const OracleBounds& b = {});
std::vector<AttrSet> oracle_maximal_identity_inds(const Relation& r, const Relation& s, const OracleBounds& b = {});
/// Every valid (X, sigma) over all partial injections.
std::vector<InclusionDependency> oracle_inds(const Relation& r, const Relation& s, const OracleBounds& b = {});
std::vector<InclusionDependency> oracle_maximal_inds(const Relation& r, const Relation& s, const OracleBounds& b = {});

std::vector<Assignment> oracle_satisfying_assignments(const NormalizedFormula& phi, const OracleBounds& b = {});
std::vector<Assignment> oracle_maximal_satisfying_assignments(const NormalizedFormula& phi,
                                                             const OracleBounds& b = {});
/// Weights k for which a satisfying assignment of weight exactly k exists.
std::vector<bool> oracle_sat_weights(const NormalizedFormula& phi, const OracleBounds& b = {});

std::vector<VertexSet> oracle_minimal_transversals(const Hypergraph& h, const OracleBounds& b = {});
/// Tagged union over the common (padded) universe.
std::vector<TaggedTransversal> oracle_transversal_union(const std::vector<Hypergraph>& hs,
                                                        const OracleBounds& b = {});

}  // namespace depprof
