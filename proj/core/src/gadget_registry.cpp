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

#include "depprof/gadget_registry.hpp"

#include <algorithm>
#include <iterator>
#include <limits>

#include "depprof/errors.hpp"
#include "depprof/random_instance.hpp"
#include "depprof/reductions.hpp"

namespace depprof {
namespace {

template <class G>
using SourceOf = typename G::source_type;
template <class G>
using TargetOf = typename G::target_type;

template <class G>
struct Hooks {
  using S = typename G::source_type;
  using T = typename G::target_type;
  using SS = typename G::source_solution;
  using TS = typename G::target_solution;

  std::function<T(const S&)> mutated;
  std::function<std::vector<SS>(const S&, const OracleBounds&)> source_oracle;
  std::function<std::vector<TS>(const T&, const OracleBounds&)> target_oracle;
  std::function<std::string(const S&, const SS&)> show_source;
  std::function<std::string(const T&, const TS&)> show_target;
  std::function<S(std::uint64_t)> random_source;
};

OracleBounds target_bounds(OracleBounds b) {
  b.max_rows = std::numeric_limits<std::size_t>::max();
  return b;
}

template <class G>
GadgetEntry parsimonious(G g, InstanceKind sk, InstanceKind tk, std::string mutation, Hooks<G> h) {
  using S = typename G::source_type;
  using T = typename G::target_type;
  using SS = typename G::source_solution;
  using TS = typename G::target_solution;
  auto run = [g, h](const Instance& inst, const OracleBounds& b, bool mutate) {
    const auto& src = std::get<S>(inst);
    auto source = h.source_oracle(src, b);
    const T tgt = mutate ? h.mutated(src) : g.forward(src);
    auto target = h.target_oracle(tgt, target_bounds(b));
    return check_bijection<SS, TS>(
        g.name, instance_digest(inst), source, target,
        [&](const TS& t) { return g.solution_back(src, tgt, t); },
        [&](const SS& s) { return h.show_source(src, s); }, [&](const TS& t) { return h.show_target(tgt, t); });
  };
  GadgetEntry e;
  e.name = g.name;
  e.source_kind = sk;
  e.target_kind = tk;
  e.mutation = std::move(mutation);
  e.forward = [g](const Instance& inst) -> Instance { return g.forward(std::get<S>(inst)); };
  e.verify = [run](const Instance& inst, const OracleBounds& b) { return run(inst, b, false); };
  e.verify_mutated = [run](const Instance& inst, const OracleBounds& b) { return run(inst, b, true); };
  e.random_source = [h](std::uint64_t seed) -> Instance { return h.random_source(seed); };
  return e;
}

template <class G>
GadgetEntry decision(G g, InstanceKind sk, InstanceKind tk, std::string mutation,
                     std::function<TargetOf<G>(const SourceOf<G>&)> mutated,
                     std::function<std::vector<bool>(const SourceOf<G>&, const OracleBounds&)> source_sizes,
                     std::function<std::vector<bool>(const TargetOf<G>&, const OracleBounds&)> target_sizes,
                     std::function<SourceOf<G>(std::uint64_t)> random_source) {
  using S = SourceOf<G>;
  auto run = [=](const Instance& inst, const OracleBounds& b, bool mutate) {
    const auto& src = std::get<S>(inst);
    const auto tgt = mutate ? mutated(src) : g.forward(src);
    return check_parameter_correspondence(g.name, instance_digest(inst), source_sizes(src, b),
                                          target_sizes(tgt, target_bounds(b)), g.parameter_map);
  };
  GadgetEntry e;
  e.name = g.name;
  e.source_kind = sk;
  e.target_kind = tk;
  e.decision = true;
  e.mutation = std::move(mutation);
  e.forward = [g](const Instance& inst) -> Instance { return g.forward(std::get<S>(inst)); };
  e.verify = [run](const Instance& inst, const OracleBounds& b) { return run(inst, b, false); };
  e.verify_mutated = [run](const Instance& inst, const OracleBounds& b) { return run(inst, b, true); };
  e.random_source = [random_source](std::uint64_t seed) -> Instance { return random_source(seed); };
  return e;
}

// Random sources.

SizeBounds relation_bounds(std::size_t max_attributes, std::size_t min_rows, std::size_t max_rows) {
  SizeBounds b;
  b.max_attributes = max_attributes;
  b.min_rows = min_rows;
  b.max_rows = max_rows;
  return b;
}

std::vector<Hypergraph> random_hypergraph_list(std::uint64_t seed) {
  Rng rng(seed);
  const auto d = rng.between(1, 3);
  SizeBounds b;
  b.max_vertices = 4;
  b.max_edges = 4;
  std::vector<Hypergraph> hs;
  for (std::size_t i = 0; i < d; ++i) hs.push_back(random_hypergraph(rng.between(0, 1u << 30), b));
  return hs;
}

PairBundle random_bundle(std::uint64_t seed) {
  Rng rng(seed);
  auto b = relation_bounds(5, 0, 5);
  b.min_attributes = b.max_attributes = rng.between(1, 5);
  return {random_relation_pair(rng.between(0, 1u << 30), b), random_relation_pair(rng.between(0, 1u << 30), b)};
}

NormalizedFormula random_dnf(std::uint64_t seed) {
  SizeBounds b;
  b.max_variables = 7;
  b.max_blocks = 1;
  b.max_terms = 4;
  return random_formula(seed, b);
}

NormalizedFormula random_wa3ns(std::uint64_t seed) {
  SizeBounds b;
  b.max_variables = 7;
  b.max_blocks = 3;
  b.max_terms = 3;
  return random_formula(seed, b);
}

// Mutations.

Relation without_first_row(const Relation& rel) {
  std::vector<Row> rows(rel.rows().begin() + (rel.num_rows() ? 1 : 0), rel.rows().end());
  return Relation(rel.schema(), std::move(rows));
}

FixedRhsInstance constant_added_column(const Relation& rel) {
  auto out = ucc_to_fd_fixed(rel);
  std::vector<Row> rows = out.relation.rows();
  for (auto& row : rows) row.back() = "1";
  return {Relation(out.relation.schema(), std::move(rows)), out.rhs};
}

std::vector<Hypergraph> all_pair_difference_sets(const Relation& rel) {
  std::vector<Hypergraph> out;
  for (std::size_t a = 0; a < rel.num_attributes(); ++a) {
    Hypergraph d(rel.schema());
    for (std::size_t r = 0; r < rel.num_rows(); ++r)
      for (std::size_t s = r + 1; s < rel.num_rows(); ++s) {
        auto e = difference_set(rel, r, s);
        e.erase(a);
        d.add_edge(std::move(e));
      }
    out.push_back(minimize(d));
  }
  return out;
}

Relation without_cross_rows(const std::vector<Hypergraph>& hs) {
  const auto rel = hypergraph_union_to_db(hs);
  const auto nv = rel.num_attributes() - hs.size();
  std::vector<Row> rows(rel.rows().begin(), rel.rows().end() - static_cast<std::ptrdiff_t>(nv));
  return Relation(rel.schema(), std::move(rows));
}

NormalizedFormula without_first_block(const NormalizedFormula& phi) {
  NormalizedFormula out(phi.variables());
  for (std::size_t i = 1; i < phi.blocks().size(); ++i) out.add_block(phi.blocks()[i]);
  return out;
}

NormalizedFormula without_injectivity(const RelationPair& p) {
  const auto phi = ind_to_wa3ns(p);
  const auto pair_clauses = p.r.num_attributes() * p.s.num_attributes() *
                            (p.r.num_attributes() + p.s.num_attributes() - 2) / 2;
  NormalizedFormula out(phi.variables());
  for (std::size_t i = 0; i + pair_clauses < phi.blocks().size(); ++i) out.add_block(phi.blocks()[i]);
  return out;
}

RelationPair plain_union(const RelationPair& a, const RelationPair& b) {
  auto r = a.r.rows();
  auto s = a.s.rows();
  r.insert(r.end(), b.r.rows().begin(), b.r.rows().end());
  s.insert(s.end(), b.s.rows().begin(), b.s.rows().end());
  return {Relation(a.r.schema(), std::move(r)), Relation(a.s.schema(), std::move(s))};
}

RelationPair without_cross_symbol(const NormalizedFormula& phi) {
  const auto pair = dnf_to_db_pair(phi);
  return {pair.r, Relation(pair.s.schema(), pair.r.rows())};
}

RelationPair union_fold(const NormalizedFormula& phi) {
  const auto schema = attribute_names_for(phi);
  RelationPair acc{Relation(schema, {}), Relation(schema, {})};
  for (const auto& block : phi.blocks()) {
    NormalizedFormula single(phi.variables());
    single.add_block(block);
    acc = plain_union(acc, dnf_to_db_pair(single));
  }
  return acc;
}

std::vector<bool> ind_sizes(const RelationPair& p, const OracleBounds& b) {
  std::vector<bool> sizes(std::min(p.r.num_attributes(), p.s.num_attributes()) + 1, false);
  for (const auto& ind : oracle_inds(p.r, p.s, b)) sizes[ind.size()] = true;
  return sizes;
}

std::vector<GadgetEntry> build_registry() {
  using K = InstanceKind;
  std::vector<GadgetEntry> reg;

  reg.push_back(parsimonious(
      gadgets::hs_to_ucc(), K::kHypergraph, K::kRelation, "drop the all-zero row r0",
      Hooks<decltype(gadgets::hs_to_ucc())>{
          [](const Hypergraph& h) { return without_first_row(hs_to_ucc(h)); },
          [](const Hypergraph& h, const OracleBounds& b) { return oracle_minimal_transversals(h, b); },
          [](const Relation& rel, const OracleBounds& b) { return oracle_minimal_uccs(rel, b); },
          transversal_json, ucc_json,
          [](std::uint64_t seed) {
            SizeBounds b;
            b.max_vertices = 6;
            b.max_edges = 8;
            b.allow_empty_edge = false;
            return random_hypergraph(seed, b);
          }}));

  reg.push_back(parsimonious(
      gadgets::ucc_to_fd_fixed(), K::kRelation, K::kFixedRhs, "fill the added column with a constant",
      Hooks<decltype(gadgets::ucc_to_fd_fixed())>{
          constant_added_column,
          [](const Relation& rel, const OracleBounds& b) { return oracle_minimal_uccs(rel, b); },
          [](const FixedRhsInstance& t, const OracleBounds& b) {
            return oracle_minimal_fds_fixed(t.relation, t.rhs, b);
          },
          ucc_json, [](const FixedRhsInstance& t, const FunctionalDependency& fd) { return fd_json(t.relation, fd); },
          [](std::uint64_t seed) { return random_relation(seed, relation_bounds(5, 0, 8)); }}));

  reg.push_back(parsimonious(
      gadgets::fd_fixed_to_fd(), K::kFixedRhs, K::kRelation, "return the input relation unchanged",
      Hooks<decltype(gadgets::fd_fixed_to_fd())>{
          [](const FixedRhsInstance& in) { return in.relation; },
          [](const FixedRhsInstance& in, const OracleBounds& b) {
            return oracle_minimal_fds_fixed(in.relation, in.rhs, b);
          },
          [](const Relation& rel, const OracleBounds& b) { return oracle_minimal_fds(rel, b); },
          [](const FixedRhsInstance& in, const FunctionalDependency& fd) { return fd_json(in.relation, fd); },
          fd_json,
          [](std::uint64_t seed) {
            Rng rng(seed);
            auto rel = random_relation(rng.between(0, 1u << 30), relation_bounds(6, 1, 8));
            const auto rhs = rng.between(0, rel.num_attributes() - 1);
            return FixedRhsInstance{std::move(rel), rhs};
          }}));

  reg.push_back(decision(
      gadgets::fd_to_cnf(), K::kRelation, K::kFormula, "drop the right-hand-side clause",
      [](const Relation& rel) { return without_first_block(fd_to_cnf(rel)); },
      [](const Relation& rel, const OracleBounds& b) { return oracle_fd_sizes(rel, b); },
      [](const NormalizedFormula& phi, const OracleBounds& b) { return oracle_sat_weights(phi, b); },
      [](std::uint64_t seed) { return random_relation(seed, relation_bounds(5, 0, 8)); }));

  reg.push_back(parsimonious(
      gadgets::db_to_hypergraph_union(), K::kRelation, K::kHypergraphList,
      "build each hypergraph from all row pairs, not only those differing on its attribute",
      Hooks<decltype(gadgets::db_to_hypergraph_union())>{
          all_pair_difference_sets,
          [](const Relation& rel, const OracleBounds& b) { return oracle_minimal_fds(rel, b); },
          [](const std::vector<Hypergraph>& hs, const OracleBounds& b) { return oracle_transversal_union(hs, b); },
          fd_json, tagged_transversal_json,
          [](std::uint64_t seed) { return random_relation(seed, relation_bounds(6, 0, 10)); }}));

  reg.push_back(parsimonious(
      gadgets::hypergraph_union_to_db(), K::kHypergraphList, K::kRelation, "drop the fresh-symbol rows",
      Hooks<decltype(gadgets::hypergraph_union_to_db())>{
          without_cross_rows,
          [](const std::vector<Hypergraph>& hs, const OracleBounds& b) { return oracle_transversal_union(hs, b); },
          [](const Relation& rel, const OracleBounds& b) { return oracle_minimal_fds(rel, b); },
          tagged_transversal_json, fd_json, random_hypergraph_list}));

  reg.push_back(parsimonious(
      gadgets::ind_identity_to_general(), K::kRelationPair, K::kRelationPair, "do not append the fresh row",
      Hooks<decltype(gadgets::ind_identity_to_general())>{
          [](const RelationPair& p) { return p; },
          [](const RelationPair& p, const OracleBounds& b) { return oracle_maximal_identity_inds(p.r, p.s, b); },
          [](const RelationPair& p, const OracleBounds& b) { return oracle_maximal_inds(p.r, p.s, b); },
          [](const RelationPair& p, const AttrSet& x) { return ucc_json(p.r, x); },
          [](const RelationPair& p, const InclusionDependency& ind) { return ind_json(p.r, p.s, ind); },
          [](std::uint64_t seed) { return random_relation_pair(seed, relation_bounds(4, 0, 6)); }}));

  reg.push_back(decision(
      gadgets::ind_to_wa3ns(), K::kRelationPair, K::kFormula, "drop the injectivity clauses", without_injectivity,
      ind_sizes, [](const NormalizedFormula& phi, const OracleBounds& b) { return oracle_sat_weights(phi, b); },
      [](std::uint64_t seed) {
        auto b = relation_bounds(3, 0, 5);
        b.same_schema = false;
        return random_relation_pair(seed, b);
      }));

  reg.push_back(parsimonious(
      gadgets::conjoin_db_pairs(), K::kPairBundle, K::kRelationPair, "union the pairs without renaming",
      Hooks<decltype(gadgets::conjoin_db_pairs())>{
          [](const PairBundle& in) { return plain_union(in.first, in.second); },
          [](const PairBundle& in, const OracleBounds& b) {
            const auto a = oracle_identity_inds(in.first.r, in.first.s, b);
            const auto c = oracle_identity_inds(in.second.r, in.second.s, b);
            std::vector<AttrSet> both;
            std::set_intersection(a.begin(), a.end(), c.begin(), c.end(), std::back_inserter(both));
            return both;
          },
          [](const RelationPair& p, const OracleBounds& b) { return oracle_identity_inds(p.r, p.s, b); },
          [](const PairBundle& in, const AttrSet& x) { return ucc_json(in.first.r, x); },
          [](const RelationPair& p, const AttrSet& x) { return ucc_json(p.r, x); }, random_bundle}));

  reg.push_back(parsimonious(
      gadgets::dnf_to_db_pair(), K::kFormula, K::kRelationPair, "copy r into s without the fresh symbol",
      Hooks<decltype(gadgets::dnf_to_db_pair())>{
          without_cross_symbol,
          [](const NormalizedFormula& phi, const OracleBounds& b) { return oracle_satisfying_assignments(phi, b); },
          [](const RelationPair& p, const OracleBounds& b) { return oracle_identity_inds(p.r, p.s, b); },
          assignment_json, [](const RelationPair& p, const AttrSet& x) { return ucc_json(p.r, x); }, random_dnf}));

  reg.push_back(parsimonious(
      gadgets::wa3ns_to_ind_identity(), K::kFormula, K::kRelationPair,
      "fold the block pairs with a plain union instead of conjoining",
      Hooks<decltype(gadgets::wa3ns_to_ind_identity())>{
          union_fold,
          [](const NormalizedFormula& phi, const OracleBounds& b) { return oracle_satisfying_assignments(phi, b); },
          [](const RelationPair& p, const OracleBounds& b) { return oracle_identity_inds(p.r, p.s, b); },
          assignment_json, [](const RelationPair& p, const AttrSet& x) { return ucc_json(p.r, x); },
          random_wa3ns}));

  return reg;
}

}  // namespace

const std::vector<GadgetEntry>& gadget_registry() {
  static const std::vector<GadgetEntry> registry = build_registry();
  return registry;
}

const GadgetEntry& find_gadget(std::string_view name) {
  for (const auto& e : gadget_registry())
    if (e.name == name) return e;
  throw InputError("unknown gadget '" + std::string(name) + "'");
}

}  // namespace depprof
