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
#include <string>
#include <utility>
#include <vector>

#include "depprof/formula.hpp"
#include "depprof/hypergraph.hpp"
#include "depprof/relation.hpp"

namespace depprof {

/// A relation together with a designated right-hand-side attribute.
struct FixedRhsInstance {
  Relation relation;
  std::size_t rhs = 0;

  bool operator==(const FixedRhsInstance&) const = default;
};

struct RelationPair {
  Relation r;
  Relation s;

  bool operator==(const RelationPair&) const = default;
};

/// Two relation pairs over one schema, the input of conjoin_db_pairs.
struct PairBundle {
  RelationPair first;
  RelationPair second;

  bool operator==(const PairBundle&) const = default;
};

/// A reduction: forward transform, solution translation and budget map.
/// `solution_back` throws InputError on target values outside its domain.
template <class Source, class Target, class SourceSolution, class TargetSolution>
struct Gadget {
  using source_type = Source;
  using target_type = Target;
  using source_solution = SourceSolution;
  using target_solution = TargetSolution;

  std::string name;
  std::function<Target(const Source&)> forward;
  std::function<SourceSolution(const Source&, const Target&, const TargetSolution&)> solution_back;
  std::function<std::size_t(std::size_t)> parameter_map = [](std::size_t k) { return k; };
};

// Transforms.

/// Rows: all-zero r0 plus r_i with value i on E_i, one per edge of min(h).
/// Throws InputError for an empty vertex set or an empty edge.
Relation hs_to_ucc(const Hypergraph& h);

/// Appends a fresh attribute holding the row number (1-based) and fixes it
/// as the right-hand side.
FixedRhsInstance ucc_to_fd_fixed(const Relation& rel);

/// Adds, for each b other than the fixed attribute, a copy of the first row
/// with a fresh symbol at b. Throws InputError for an empty relation.
Relation fd_fixed_to_fd(const FixedRhsInstance& in);

/// CNF with variables x1..xn (left-hand side) then y1..yn (right-hand side).
/// Size-k FDs correspond to weight-(k+1) satisfying assignments.
NormalizedFormula fd_to_cnf(const Relation& rel);

/// One hypergraph per attribute a, in schema order: the punctured difference
/// sets of a, expressed over the full schema with a as an isolated vertex.
std::vector<Hypergraph> db_to_hypergraph_union(const Relation& rel);

/// Schema: the common vertex universe, then one attribute x<i> per
/// hypergraph. Throws InputError on an empty list.
Relation hypergraph_union_to_db(const std::vector<Hypergraph>& hs);

/// Appends a row of distinct fresh symbols to both relations.
RelationPair ind_identity_to_general(const RelationPair& p);

/// Variables x<i>_<j> (attribute i of r mapped to attribute j of s), row
/// major. Blocks: one per row of r, then the injectivity clauses.
NormalizedFormula ind_to_wa3ns(const RelationPair& p);

/// Renames every value of the second pair through a fresh-symbol pool and
/// takes componentwise unions.
RelationPair conjoin_db_pairs(const PairBundle& in);

/// phi must be antimonotone with exactly one block of at least one term.
RelationPair dnf_to_db_pair(const NormalizedFormula& phi);

/// dnf_to_db_pair per block, folded left to right with conjoin_db_pairs.
/// Throws InputError for formulas without variables or with an empty block.
RelationPair wa3ns_to_ind_identity(const NormalizedFormula& phi);

/// Attribute names used for the variables of phi: x<d> becomes a<d>, other
/// names are kept; on a clash the variable names are used unchanged.
std::vector<std::string> attribute_names_for(const NormalizedFormula& phi);

/// Reads a satisfying assignment of fd_to_cnf(rel) as a generalized FD
/// (left-hand side, right-hand sides).
std::pair<AttrSet, AttrSet> decode_fd_assignment(const Relation& rel, const Assignment& a);

/// Reads an assignment of ind_to_wa3ns(p) as a column mapping. Throws
/// InputError when the true variables do not form a partial injection.
InclusionDependency decode_ind_assignment(const RelationPair& p, const Assignment& a);

// Gadget bundles.

namespace gadgets {

Gadget<Hypergraph, Relation, VertexSet, AttrSet> hs_to_ucc();
Gadget<Relation, FixedRhsInstance, AttrSet, FunctionalDependency> ucc_to_fd_fixed();
Gadget<FixedRhsInstance, Relation, FunctionalDependency, FunctionalDependency> fd_fixed_to_fd();
Gadget<Relation, NormalizedFormula, FunctionalDependency, Assignment> fd_to_cnf();
Gadget<Relation, std::vector<Hypergraph>, FunctionalDependency, TaggedTransversal> db_to_hypergraph_union();
Gadget<std::vector<Hypergraph>, Relation, TaggedTransversal, FunctionalDependency> hypergraph_union_to_db();
Gadget<RelationPair, RelationPair, AttrSet, InclusionDependency> ind_identity_to_general();
Gadget<RelationPair, NormalizedFormula, InclusionDependency, Assignment> ind_to_wa3ns();
Gadget<PairBundle, RelationPair, AttrSet, AttrSet> conjoin_db_pairs();
Gadget<NormalizedFormula, RelationPair, Assignment, AttrSet> dnf_to_db_pair();
Gadget<NormalizedFormula, RelationPair, Assignment, AttrSet> wa3ns_to_ind_identity();

}  // namespace gadgets
}  // namespace depprof
