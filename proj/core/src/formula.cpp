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

#include "depprof/formula.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "depprof/errors.hpp"

namespace depprof {

Term::Term(std::vector<Literal> literals) : literals_(std::move(literals)) {
  for (const auto& l : literals_) (l.negated ? negative_ : positive_).insert(l.var);
}

Term Term::all_negative(const IndexSet& vars) {
  std::vector<Literal> lits;
  for (auto v : vars) lits.push_back({v, true});
  return Term(std::move(lits));
}

NormalizedFormula::NormalizedFormula(std::vector<std::string> variables) {
  for (const auto& v : variables) {
    if (index_.contains(v)) throw InputError("duplicate variable '" + v + "'");
    add_variable(v);
  }
}

std::size_t NormalizedFormula::add_variable(std::string_view name) {
  std::string key(name);
  if (auto it = index_.find(key); it != index_.end()) return it->second;
  const auto idx = variables_.size();
  variables_.push_back(key);
  index_.emplace(std::move(key), idx);
  return idx;
}

void NormalizedFormula::add_block(Block block) {
  for (const auto& t : block)
    for (const auto& l : t.literals())
      if (l.var >= variables_.size()) throw InputError("term mentions undeclared variable #" + std::to_string(l.var));
  blocks_.push_back(std::move(block));
}

std::optional<std::size_t> NormalizedFormula::find_variable(std::string_view name) const {
  if (auto it = index_.find(std::string(name)); it != index_.end()) return it->second;
  return std::nullopt;
}

std::size_t NormalizedFormula::variable(std::string_view name) const {
  if (auto v = find_variable(name)) return *v;
  throw InputError("undeclared variable '" + std::string(name) + "'");
}

std::vector<std::string> NormalizedFormula::names_of(const Assignment& a) const {
  std::vector<std::string> out;
  for (auto v : a) {
    if (v >= variables_.size()) throw InputError("assignment names undeclared variable #" + std::to_string(v));
    out.push_back(variables_[v]);
  }
  return out;
}

bool NormalizedFormula::is_antimonotone() const {
  for (const auto& b : blocks_)
    for (const auto& t : b)
      if (!t.positive_vars().empty()) return false;
  return true;
}

bool NormalizedFormula::is_cnf() const {
  for (const auto& b : blocks_)
    for (const auto& t : b)
      if (t.literals().size() != 1) return false;
  return true;
}

bool evaluate(const NormalizedFormula& phi, const Assignment& a) {
  if (a.bound() > phi.num_variables()) throw InputError("assignment " + a.to_string() + " names undeclared variables");
  for (const auto& block : phi.blocks()) {
    const bool sat = std::any_of(block.begin(), block.end(), [&](const Term& t) { return t.satisfied_by(a); });
    if (!sat) return false;
  }
  return true;
}

namespace {

// Satisfying assignments of antimonotone formulas are downward closed, so a
// set-growing search may stop at the first unsatisfying extension.
bool grow_antimonotone(const NormalizedFormula& phi, Assignment& current, std::size_t next, std::size_t remaining) {
  if (remaining == 0) return true;
  const auto n = phi.num_variables();
  for (std::size_t v = next; v + remaining <= n; ++v) {
    current.insert(v);
    const bool ok = evaluate(phi, current) && grow_antimonotone(phi, current, v + 1, remaining - 1);
    current.erase(v);
    if (ok) return true;
  }
  return false;
}

bool any_combination(const NormalizedFormula& phi, Assignment& current, std::size_t next, std::size_t remaining) {
  if (remaining == 0) return evaluate(phi, current);
  const auto n = phi.num_variables();
  for (std::size_t v = next; v + remaining <= n; ++v) {
    current.insert(v);
    const bool ok = any_combination(phi, current, v + 1, remaining - 1);
    current.erase(v);
    if (ok) return true;
  }
  return false;
}

}  // namespace

bool weighted_sat(const NormalizedFormula& phi, std::size_t k, std::size_t max_variables) {
  if (phi.num_variables() > max_variables)
    throw RefusalError("weighted satisfiability search refuses " + std::to_string(phi.num_variables()) +
                       " variables (bound " + std::to_string(max_variables) + ")");
  if (k > phi.num_variables()) return false;
  Assignment current;
  if (phi.is_antimonotone()) return evaluate(phi, current) && grow_antimonotone(phi, current, 0, k);
  return any_combination(phi, current, 0, k);
}

namespace {

class MaximalAssignmentSearch {
 public:
  explicit MaximalAssignmentSearch(const NormalizedFormula& phi) : phi_(phi), seen_(phi.blocks().size() + 1) {}

  std::vector<IndexSet> minimal_unions() {
    IndexSet start;
    descend(0, start);
    // Drop unions that strictly contain another one.
    canonicalize(finals_);
    std::vector<IndexSet> out;
    for (const auto& u : finals_) {
      const bool dominated = std::any_of(finals_.begin(), finals_.end(),
                                         [&](const IndexSet& o) { return o.is_proper_subset_of(u); });
      if (!dominated) out.push_back(u);
    }
    return out;
  }

 private:
  bool covered_by_final(const IndexSet& u) const {
    return std::any_of(finals_.begin(), finals_.end(), [&](const IndexSet& f) { return f.is_subset_of(u); });
  }

  void descend(std::size_t depth, const IndexSet& forced_false) {
    if (covered_by_final(forced_false)) return;
    if (depth == phi_.blocks().size()) {
      finals_.push_back(forced_false);
      return;
    }
    if (!seen_[depth].insert(forced_false).second) return;

    const auto& block = phi_.blocks()[depth];
    std::vector<IndexSet> options;
    options.reserve(block.size());
    for (const auto& t : block) options.push_back(forced_false | t.negative_vars());
    canonicalize(options);
    for (const auto& o : options) {
      const bool dominated = std::any_of(options.begin(), options.end(),
                                         [&](const IndexSet& p) { return p.is_proper_subset_of(o); });
      if (!dominated) descend(depth + 1, o);
    }
  }

  const NormalizedFormula& phi_;
  std::vector<std::unordered_set<IndexSet>> seen_;
  std::vector<IndexSet> finals_;
};

}  // namespace

std::vector<Assignment> maximal_satisfying_assignments(const NormalizedFormula& phi) {
  if (!phi.is_antimonotone())
    throw InputError("maximal satisfying assignment enumeration needs an antimonotone formula");
  MaximalAssignmentSearch search(phi);
  std::vector<Assignment> out;
  for (const auto& u : search.minimal_unions()) out.push_back(u.complement(phi.num_variables()));
  std::sort(out.begin(), out.end());
  return out;
}

void for_each_maximal_satisfying_assignment(const NormalizedFormula& phi,
                                            const std::function<bool(const Assignment&)>& visit) {
  for (const auto& a : maximal_satisfying_assignments(phi))
    if (!visit(a)) return;
}

Hypergraph antimonotone_cnf_to_hypergraph(const NormalizedFormula& phi) {
  if (!phi.is_cnf()) throw InputError("formula is not in conjunctive normal form");
  if (!phi.is_antimonotone()) throw InputError("formula is not antimonotone");
  Hypergraph h(phi.variables());
  for (const auto& block : phi.blocks()) {
    VertexSet edge;
    for (const auto& t : block) edge |= t.negative_vars();
    h.add_edge(std::move(edge));
  }
  return h;
}

NormalizedFormula hypergraph_to_antimonotone_cnf(const Hypergraph& h) {
  NormalizedFormula phi(h.vertices());
  for (const auto& e : h.edges()) {
    Block clause;
    for (auto v : e) clause.push_back(Term({Literal{v, true}}));
    phi.add_block(std::move(clause));
  }
  return phi;
}

}  // namespace depprof
