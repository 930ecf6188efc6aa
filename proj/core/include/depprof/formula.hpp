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
#include <string_view>
#include <unordered_map>
#include <vector>

#include "depprof/hypergraph.hpp"
#include "depprof/index_set.hpp"

namespace depprof {

/// The set of variables assigned true; all others are false.
using Assignment = IndexSet;

struct Literal {
  std::size_t var = 0;
  bool negated = true;
  bool operator==(const Literal&) const = default;
};

/// A conjunction of literals. The empty term is true.
class Term {
 public:
  Term() = default;
  explicit Term(std::vector<Literal> literals);
  /// The conjunction of the negations of `vars`, in ascending order.
  static Term all_negative(const IndexSet& vars);

  const std::vector<Literal>& literals() const { return literals_; }
  const IndexSet& negative_vars() const { return negative_; }
  const IndexSet& positive_vars() const { return positive_; }
  bool empty() const { return literals_.empty(); }
  bool satisfied_by(const Assignment& a) const {
    return !negative_.intersects(a) && positive_.is_subset_of(a);
  }

  bool operator==(const Term& o) const { return literals_ == o.literals_; }

 private:
  std::vector<Literal> literals_;
  IndexSet negative_;
  IndexSet positive_;
};

/// A disjunction of terms (a DNF). The empty block is false.
using Block = std::vector<Term>;

/// A 3-normalized formula: a conjunction of DNF blocks over named variables.
/// A formula without blocks is true. CNF is the special case where every
/// term is a single literal.
class NormalizedFormula {
 public:
  NormalizedFormula() = default;
  explicit NormalizedFormula(std::vector<std::string> variables);

  std::size_t add_variable(std::string_view name);
  /// Throws InputError if a term mentions an undeclared variable.
  void add_block(Block block);

  const std::vector<std::string>& variables() const { return variables_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t num_variables() const { return variables_.size(); }

  std::optional<std::size_t> find_variable(std::string_view name) const;
  std::size_t variable(std::string_view name) const;
  std::vector<std::string> names_of(const Assignment& a) const;

  /// Only negative literals.
  bool is_antimonotone() const;
  /// Every term is a single literal.
  bool is_cnf() const;

  bool operator==(const NormalizedFormula& o) const {
    return variables_ == o.variables_ && blocks_ == o.blocks_;
  }

 private:
  std::vector<std::string> variables_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<Block> blocks_;
};

/// Throws InputError when the assignment names an undeclared variable.
bool evaluate(const NormalizedFormula& phi, const Assignment& a);

inline constexpr std::size_t kDefaultWeightedSatVariableBound = 24;

/// Is there a satisfying assignment with exactly k true variables? Bounded
/// exhaustive search; antimonotone inputs prune on the downward closure of
/// satisfying assignments. Throws RefusalError above `max_variables`.
bool weighted_sat(const NormalizedFormula& phi, std::size_t k,
                  std::size_t max_variables = kDefaultWeightedSatVariableBound);

/// Inclusion-wise maximal satisfying assignments of an antimonotone formula,
/// sorted canonically. Candidates are complements of unions of one term per
/// block; dominated partial unions are skipped. Throws InputError on
/// formulas with positive literals.
std::vector<Assignment> maximal_satisfying_assignments(const NormalizedFormula& phi);
void for_each_maximal_satisfying_assignment(const NormalizedFormula& phi,
                                            const std::function<bool(const Assignment&)>& visit);

/// Clause variable sets of an antimonotone CNF, as edges over the variables.
Hypergraph antimonotone_cnf_to_hypergraph(const NormalizedFormula& phi);
/// One clause (OR of negated vertex variables) per edge; variables are named
/// after the vertices.
NormalizedFormula hypergraph_to_antimonotone_cnf(const Hypergraph& h);

}  // namespace depprof
