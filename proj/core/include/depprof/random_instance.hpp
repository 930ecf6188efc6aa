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
#include <cstdint>
#include <random>
#include <string>

#include "depprof/formula.hpp"
#include "depprof/hypergraph.hpp"
#include "depprof/reductions.hpp"
#include "depprof/relation.hpp"

namespace depprof {

struct SizeBounds {
  std::size_t min_vertices = 1;
  std::size_t max_vertices = 5;
  std::size_t max_edges = 6;
  bool allow_empty_edge = true;

  std::size_t min_attributes = 1;
  std::size_t max_attributes = 4;
  std::size_t min_rows = 0;
  std::size_t max_rows = 6;
  /// Values are drawn from {0, ..., domain-1} with domain in [1, max_domain].
  std::size_t max_domain = 3;

  std::size_t min_variables = 1;
  std::size_t max_variables = 5;
  std::size_t max_blocks = 3;
  /// Terms per block (at least one) and literals per term (3-normalized
  /// formulas have conjunctive terms of any size).
  std::size_t max_terms = 3;
  std::size_t max_term_size = 3;

  /// Pairs: s reuses rows of r with this percentage, otherwise draws fresh.
  unsigned copy_percent = 50;
  bool same_schema = true;
};

/// Portable deterministic generator: raw mt19937_64 output reduced by modulo.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform-ish integer in [lo, hi]; lo when hi < lo.
  std::size_t between(std::size_t lo, std::size_t hi);
  bool percent(unsigned p) { return between(0, 99) < p; }

 private:
  std::mt19937_64 engine_;
};

/// Attribute, vertex and variable names used by the generators.
std::string generated_name(std::size_t i);

Hypergraph random_hypergraph(std::uint64_t seed, const SizeBounds& b = {});
/// Deduplicated rows; schema a, b, c, ...
Relation random_relation(std::uint64_t seed, const SizeBounds& b = {});
/// Antimonotone, every block has at least one term; variables x1, x2, ...
NormalizedFormula random_formula(std::uint64_t seed, const SizeBounds& b = {});
/// With same_schema false, s gets its own attribute count and names p, q, ...
RelationPair random_relation_pair(std::uint64_t seed, const SizeBounds& b = {});

}  // namespace depprof
