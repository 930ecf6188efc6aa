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

#include "depprof/reductions.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <unordered_map>
#include <unordered_set>

#include "depprof/errors.hpp"
#include "depprof/fresh_symbols.hpp"

namespace depprof {
namespace {

std::string with_underscores_until_free(std::string name, const std::unordered_set<std::string>& taken) {
  while (taken.contains(name)) name.insert(0, "_");
  return name;
}

void require_shared_schema(std::initializer_list<const Relation*> rels) {
  const auto& schema = (*rels.begin())->schema();
  for (const auto* r : rels)
    if (r->schema() != schema) throw InputError("all relations must share one schema");
}

Row zero_row(std::size_t n) { return Row(n, "0"); }

}  // namespace

Relation hs_to_ucc(const Hypergraph& h) {
  if (h.num_vertices() == 0) throw InputError("hypergraph has no vertices");
  if (h.has_empty_edge()) throw InputError("an empty edge cannot be a difference set");
  const auto m = minimize(h);
  std::vector<Row> rows{zero_row(m.num_vertices())};
  for (std::size_t i = 0; i < m.num_edges(); ++i) {
    Row row = zero_row(m.num_vertices());
    for (auto v : m.edges()[i]) row[v] = std::to_string(i + 1);
    rows.push_back(std::move(row));
  }
  return Relation(m.vertices(), std::move(rows));
}

FixedRhsInstance ucc_to_fd_fixed(const Relation& rel) {
  const std::unordered_set<std::string> taken(rel.schema().begin(), rel.schema().end());
  auto schema = rel.schema();
  schema.push_back(with_underscores_until_free("a", taken));
  std::vector<Row> rows;
  for (std::size_t i = 0; i < rel.num_rows(); ++i) {
    Row row = rel.rows()[i];
    row.push_back(std::to_string(i + 1));
    rows.push_back(std::move(row));
  }
  const auto rhs = schema.size() - 1;
  return {Relation(std::move(schema), std::move(rows)), rhs};
}

Relation fd_fixed_to_fd(const FixedRhsInstance& in) {
  const auto& rel = in.relation;
  if (in.rhs >= rel.num_attributes()) throw InputError("fixed right-hand side is not in the schema");
  if (rel.num_rows() == 0) throw InputError("relation has no rows");
  auto pool = FreshSymbolPool::avoiding({&rel});
  const auto cross = pool.next();
  auto rows = rel.rows();
  for (std::size_t b = 0; b < rel.num_attributes(); ++b) {
    if (b == in.rhs) continue;
    Row row = rel.rows().front();
    row[b] = cross;
    rows.push_back(std::move(row));
  }
  return Relation(rel.schema(), std::move(rows));
}

NormalizedFormula fd_to_cnf(const Relation& rel) {
  const auto n = rel.num_attributes();
  std::vector<std::string> vars;
  for (std::size_t i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) vars.push_back("y" + std::to_string(i));
  NormalizedFormula phi(std::move(vars));
  const auto x = [](std::size_t a) { return a; };
  const auto y = [n](std::size_t a) { return n + a; };

  Block rhs_clause;
  for (std::size_t a = 0; a < n; ++a) rhs_clause.push_back(Term({Literal{y(a), false}}));
  phi.add_block(std::move(rhs_clause));
  for (std::size_t a = 0; a < n; ++a) phi.add_block({Term({Literal{y(a)}}), Term({Literal{x(a)}})});
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t r = 0; r < rel.num_rows(); ++r) {
      for (std::size_t s = r + 1; s < rel.num_rows(); ++s) {
        if (rel.code(r, a) == rel.code(s, a)) continue;
        Block clause{Term({Literal{y(a)}})};
        for (std::size_t b = 0; b < n; ++b)
          if (b != a && rel.code(r, b) != rel.code(s, b)) clause.push_back(Term({Literal{x(b), false}}));
        phi.add_block(std::move(clause));
      }
    }
  }
  return phi;
}

std::vector<Hypergraph> db_to_hypergraph_union(const Relation& rel) {
  std::vector<Hypergraph> out;
  for (std::size_t a = 0; a < rel.num_attributes(); ++a) {
    Hypergraph d(rel.schema());
    const auto punctured = punctured_difference_sets(rel, a);
    for (const auto& e : punctured.edges()) {
      VertexSet lifted;
      for (auto v : e) lifted.insert(v < a ? v : v + 1);
      d.add_edge(std::move(lifted));
    }
    out.push_back(std::move(d));
  }
  return out;
}

Relation hypergraph_union_to_db(const std::vector<Hypergraph>& hs) {
  if (hs.empty()) throw InputError("hypergraph list is empty");
  const auto padded = pad_to_common_universe(hs);
  const auto& universe = padded.front().vertices();
  const auto nv = universe.size();
  const auto d = padded.size();

  std::vector<std::string> xs;
  for (std::size_t i = 1; i <= d; ++i) xs.push_back("x" + std::to_string(i));
  const std::unordered_set<std::string> taken(universe.begin(), universe.end());
  auto clashes = [&] { return std::any_of(xs.begin(), xs.end(), [&](const auto& x) { return taken.contains(x); }); };
  while (clashes())
    for (auto& x : xs) x.insert(0, "_");

  auto schema = universe;
  schema.insert(schema.end(), xs.begin(), xs.end());
  std::vector<Row> rows{zero_row(nv + d)};
  std::size_t j = 0;
  for (std::size_t i = 0; i < d; ++i) {
    for (const auto& e : padded[i].edges()) {
      Row row = zero_row(nv + d);
      const auto tag = std::to_string(++j);
      for (auto v : e) row[v] = tag;
      row[nv + i] = "1";
      rows.push_back(std::move(row));
    }
  }
  FreshSymbolPool pool;
  const auto cross = pool.next();
  for (std::size_t v = 0; v < nv; ++v) {
    Row row = zero_row(nv + d);
    row[v] = cross;
    rows.push_back(std::move(row));
  }
  return Relation(std::move(schema), std::move(rows));
}

RelationPair ind_identity_to_general(const RelationPair& p) {
  require_shared_schema({&p.r, &p.s});
  auto pool = FreshSymbolPool::avoiding({&p.r, &p.s});
  Row fresh;
  for (std::size_t a = 0; a < p.r.num_attributes(); ++a) fresh.push_back(pool.next());
  auto r_rows = p.r.rows();
  auto s_rows = p.s.rows();
  r_rows.push_back(fresh);
  s_rows.push_back(fresh);
  return {Relation(p.r.schema(), std::move(r_rows)), Relation(p.s.schema(), std::move(s_rows))};
}

NormalizedFormula ind_to_wa3ns(const RelationPair& p) {
  const auto& r = p.r;
  const auto& s = p.s;
  const auto nr = r.num_attributes();
  const auto ns = s.num_attributes();
  std::vector<std::string> vars;
  for (std::size_t i = 1; i <= nr; ++i)
    for (std::size_t j = 1; j <= ns; ++j) vars.push_back("x" + std::to_string(i) + "_" + std::to_string(j));
  NormalizedFormula phi(std::move(vars));
  const auto var = [ns](std::size_t i, std::size_t j) { return i * ns + j; };

  if (s.num_rows() == 0 && r.num_rows() > 0) {
    // Only the empty IND holds: force every variable false.
    for (std::size_t v = 0; v < phi.num_variables(); ++v) phi.add_block({Term({Literal{v}})});
  }
  for (std::size_t l = 0; l < r.num_rows(); ++l) {
    if (s.num_rows() == 0) break;
    Block block;
    for (std::size_t m = 0; m < s.num_rows(); ++m) {
      IndexSet forbidden;
      for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < ns; ++j)
          if (r.value(l, i) != s.value(m, j)) forbidden.insert(var(i, j));
      block.push_back(Term::all_negative(forbidden));
    }
    phi.add_block(std::move(block));
  }
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < ns; ++j)
      for (std::size_t j2 = j + 1; j2 < ns; ++j2) phi.add_block({Term({Literal{var(i, j)}}), Term({Literal{var(i, j2)}})});
  for (std::size_t j = 0; j < ns; ++j)
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t i2 = i + 1; i2 < nr; ++i2) phi.add_block({Term({Literal{var(i, j)}}), Term({Literal{var(i2, j)}})});
  return phi;
}

RelationPair conjoin_db_pairs(const PairBundle& in) {
  const auto& [p1, p2] = in;
  require_shared_schema({&p1.r, &p1.s, &p2.r, &p2.s});
  auto pool = FreshSymbolPool::avoiding({&p1.r, &p1.s, &p2.r, &p2.s});
  std::unordered_map<std::string, std::string> rename;
  auto renamed = [&](const Relation& rel) {
    std::vector<Row> rows;
    for (const auto& row : rel.rows()) {
      Row out;
      for (const auto& v : row) {
        auto it = rename.find(v);
        if (it == rename.end()) it = rename.emplace(v, pool.next()).first;
        out.push_back(it->second);
      }
      rows.push_back(std::move(out));
    }
    return rows;
  };
  auto r_rows = p1.r.rows();
  auto s_rows = p1.s.rows();
  for (auto& row : renamed(p2.r)) r_rows.push_back(std::move(row));
  for (auto& row : renamed(p2.s)) s_rows.push_back(std::move(row));
  return {Relation(p1.r.schema(), std::move(r_rows)), Relation(p1.s.schema(), std::move(s_rows))};
}

std::vector<std::string> attribute_names_for(const NormalizedFormula& phi) {
  std::vector<std::string> names;
  for (const auto& v : phi.variables()) {
    const bool indexed = v.size() > 1 && v.front() == 'x' &&
                         std::all_of(v.begin() + 1, v.end(), [](unsigned char c) { return std::isdigit(c); });
    names.push_back(indexed ? "a" + v.substr(1) : v);
  }
  const std::unordered_set<std::string> distinct(names.begin(), names.end());
  return distinct.size() == names.size() ? names : phi.variables();
}

RelationPair dnf_to_db_pair(const NormalizedFormula& phi) {
  if (phi.num_variables() == 0) throw InputError("formula has no variables");
  if (!phi.is_antimonotone()) throw InputError("formula is not antimonotone");
  if (phi.blocks().size() != 1) throw InputError("formula is not a single DNF block");
  const auto& terms = phi.blocks().front();
  if (terms.empty()) throw InputError("DNF block has no terms");
  const auto n = phi.num_variables();
  const auto schema = attribute_names_for(phi);

  std::vector<Row> r_rows;
  for (std::size_t j = 0; j < terms.size(); ++j) {
    Row row = zero_row(n);
    for (auto v : terms[j].negative_vars()) row[v] = std::to_string(j + 1);
    r_rows.push_back(std::move(row));
  }
  FreshSymbolPool pool;
  const auto cross = pool.next();
  std::vector<Row> s_rows;
  for (const auto& term : terms) {
    for (const auto& base : r_rows) {
      Row row = base;
      for (auto v : term.negative_vars()) row[v] = cross;
      s_rows.push_back(std::move(row));
    }
  }
  return {Relation(schema, std::move(r_rows)), Relation(schema, std::move(s_rows))};
}

RelationPair wa3ns_to_ind_identity(const NormalizedFormula& phi) {
  if (phi.num_variables() == 0) throw InputError("formula has no variables");
  if (!phi.is_antimonotone()) throw InputError("formula is not antimonotone");
  const auto schema = attribute_names_for(phi);
  if (phi.blocks().empty()) return {Relation(schema, {}), Relation(schema, {})};
  std::optional<RelationPair> acc;
  for (const auto& block : phi.blocks()) {
    if (block.empty()) throw InputError("an empty block has no relation-pair encoding");
    NormalizedFormula single(phi.variables());
    single.add_block(block);
    auto pair = dnf_to_db_pair(single);
    acc = acc ? conjoin_db_pairs({std::move(*acc), std::move(pair)}) : std::move(pair);
  }
  return std::move(*acc);
}

std::pair<AttrSet, AttrSet> decode_fd_assignment(const Relation& rel, const Assignment& a) {
  const auto n = rel.num_attributes();
  if (a.bound() > 2 * n) throw InputError("assignment sets an undeclared variable");
  AttrSet lhs;
  AttrSet rhs;
  for (auto v : a) (v < n ? lhs : rhs).insert(v < n ? v : v - n);
  return {lhs, rhs};
}

InclusionDependency decode_ind_assignment(const RelationPair& p, const Assignment& a) {
  const auto ns = p.s.num_attributes();
  if (a.bound() > p.r.num_attributes() * ns) throw InputError("assignment sets an undeclared variable");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (auto v : a) pairs.emplace_back(v / ns, v % ns);
  auto ind = InclusionDependency::from_pairs(std::move(pairs));
  std::vector<std::size_t> images = ind.rhs;
  std::sort(images.begin(), images.end());
  if (!ind.is_well_formed() || std::adjacent_find(images.begin(), images.end()) != images.end())
    throw InputError("assignment is not a partial injection");
  return ind;
}

namespace gadgets {

Gadget<Hypergraph, Relation, VertexSet, AttrSet> hs_to_ucc() {
  return {"hs_to_ucc", [](const Hypergraph& h) { return depprof::hs_to_ucc(h); },
          [](const Hypergraph& h, const Relation&, const AttrSet& x) {
            if (x.bound() > h.num_vertices()) throw InputError("column set leaves the vertex universe");
            return x;
          }};
}

Gadget<Relation, FixedRhsInstance, AttrSet, FunctionalDependency> ucc_to_fd_fixed() {
  return {"ucc_to_fd_fixed", [](const Relation& rel) { return depprof::ucc_to_fd_fixed(rel); },
          [](const Relation& rel, const FixedRhsInstance& t, const FunctionalDependency& fd) {
            if (fd.rhs != t.rhs) throw InputError("FD does not have the fixed right-hand side");
            if (fd.lhs.bound() > rel.num_attributes()) throw InputError("FD left-hand side uses the added column");
            return fd.lhs;
          }};
}

Gadget<FixedRhsInstance, Relation, FunctionalDependency, FunctionalDependency> fd_fixed_to_fd() {
  return {"fd_fixed_to_fd", [](const FixedRhsInstance& in) { return depprof::fd_fixed_to_fd(in); },
          [](const FixedRhsInstance& in, const Relation&, const FunctionalDependency& fd) {
            if (fd.rhs != in.rhs) throw InputError("FD does not have the fixed right-hand side");
            return fd;
          }};
}

Gadget<Relation, NormalizedFormula, FunctionalDependency, Assignment> fd_to_cnf() {
  return {"fd_to_cnf", [](const Relation& rel) { return depprof::fd_to_cnf(rel); },
          [](const Relation& rel, const NormalizedFormula&, const Assignment& a) {
            auto [lhs, rhs] = decode_fd_assignment(rel, a);
            if (rhs.size() != 1) throw InputError("assignment does not select exactly one right-hand side");
            return FunctionalDependency{lhs, rhs.first()};
          },
          [](std::size_t k) { return k + 1; }};
}

Gadget<Relation, std::vector<Hypergraph>, FunctionalDependency, TaggedTransversal> db_to_hypergraph_union() {
  return {"db_to_hypergraph_union", [](const Relation& rel) { return depprof::db_to_hypergraph_union(rel); },
          [](const Relation& rel, const std::vector<Hypergraph>&, const TaggedTransversal& t) {
            if (t.source_index >= rel.num_attributes() || t.vertex_set.bound() > rel.num_attributes())
              throw InputError("tagged transversal leaves the schema");
            return FunctionalDependency{t.vertex_set, t.source_index};
          }};
}

Gadget<std::vector<Hypergraph>, Relation, TaggedTransversal, FunctionalDependency> hypergraph_union_to_db() {
  return {"hypergraph_union_to_db", [](const std::vector<Hypergraph>& hs) { return depprof::hypergraph_union_to_db(hs); },
          [](const std::vector<Hypergraph>& hs, const Relation& rel, const FunctionalDependency& fd) {
            const auto nv = rel.num_attributes() - hs.size();
            if (fd.rhs < nv) throw InputError("FD right-hand side is a vertex column");
            if (fd.lhs.bound() > nv) throw InputError("FD left-hand side uses an indicator column");
            return TaggedTransversal{fd.lhs, fd.rhs - nv};
          }};
}

Gadget<RelationPair, RelationPair, AttrSet, InclusionDependency> ind_identity_to_general() {
  return {"ind_identity_to_general", [](const RelationPair& p) { return depprof::ind_identity_to_general(p); },
          [](const RelationPair&, const RelationPair&, const InclusionDependency& ind) {
            if (!ind.is_identity()) throw InputError("IND does not use the identity mapping");
            return ind.lhs_set();
          }};
}

Gadget<RelationPair, NormalizedFormula, InclusionDependency, Assignment> ind_to_wa3ns() {
  return {"ind_to_wa3ns", [](const RelationPair& p) { return depprof::ind_to_wa3ns(p); },
          [](const RelationPair& p, const NormalizedFormula&, const Assignment& a) {
            return decode_ind_assignment(p, a);
          }};
}

Gadget<PairBundle, RelationPair, AttrSet, AttrSet> conjoin_db_pairs() {
  return {"conjoin_db_pairs", [](const PairBundle& in) { return depprof::conjoin_db_pairs(in); },
          [](const PairBundle&, const RelationPair&, const AttrSet& x) { return x; }};
}

Gadget<NormalizedFormula, RelationPair, Assignment, AttrSet> dnf_to_db_pair() {
  return {"dnf_to_db_pair", [](const NormalizedFormula& phi) { return depprof::dnf_to_db_pair(phi); },
          [](const NormalizedFormula&, const RelationPair&, const AttrSet& x) { return x; }};
}

Gadget<NormalizedFormula, RelationPair, Assignment, AttrSet> wa3ns_to_ind_identity() {
  return {"wa3ns_to_ind_identity", [](const NormalizedFormula& phi) { return depprof::wa3ns_to_ind_identity(phi); },
          [](const NormalizedFormula&, const RelationPair&, const AttrSet& x) { return x; }};
}

}  // namespace gadgets
}  // namespace depprof
