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

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "depprof/formula.hpp"
#include "depprof/hypergraph.hpp"
#include "depprof/reductions.hpp"
#include "depprof/relation.hpp"

namespace depprof {

/// Any gadget source or target. Alternative order matches InstanceKind.
using Instance = std::variant<Hypergraph, std::vector<Hypergraph>, Relation, FixedRhsInstance, RelationPair,
                              PairBundle, NormalizedFormula>;

enum class InstanceKind { kHypergraph, kHypergraphList, kRelation, kFixedRhs, kRelationPair, kPairBundle, kFormula };

InstanceKind kind_of(const Instance& inst);
const char* kind_name(InstanceKind kind);

/// Canonical compact JSON. Bundles:
///   {"hypergraphs":[...]}, {"relation":{...},"rhs":"a"}, {"r":{...},"s":{...}},
///   {"first":{"r","s"},"second":{"r","s"}}.
std::string instance_to_json(const Instance& inst);
Instance instance_from_json(const std::string& json);

/// FNV-1a-64 of the canonical JSON.
std::string instance_digest(const Instance& inst);

/// By extension: .csv relation, .hg hypergraph, .wf formula, .json sniffed
/// from its keys. Throws InputError for unknown extensions or bad content.
Instance load_instance(const std::string& path);

/// Builds an instance of `want` from loaded parts, e.g. two relations into a
/// pair, or a relation plus `rhs` into a fixed-RHS instance.
Instance assemble_instance(InstanceKind want, std::vector<Instance> parts, const std::optional<std::string>& rhs = {});

/// Text rendering where a native text format exists (CSV, hypergraph text,
/// formula text), JSON otherwise.
std::string instance_to_text(const Instance& inst);

// One-line JSON objects for solutions.

std::string ucc_json(const Relation& rel, const AttrSet& x);
std::string fd_json(const Relation& rel, const FunctionalDependency& fd);
std::string ind_json(const Relation& r, const Relation& s, const InclusionDependency& ind);
std::string transversal_json(const Hypergraph& h, const VertexSet& t);
std::string tagged_transversal_json(const std::vector<Hypergraph>& hs, const TaggedTransversal& t);
std::string assignment_json(const NormalizedFormula& phi, const Assignment& a);

}  // namespace depprof
