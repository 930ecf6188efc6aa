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

#include <gtest/gtest.h>

#include <algorithm>

#include "depprof/discovery.hpp"
#include "depprof/errors.hpp"
#include "depprof/formula_io.hpp"
#include "depprof/fresh_symbols.hpp"
#include "depprof/oracle.hpp"
#include "depprof/random_instance.hpp"
#include "test_support.hpp"

namespace depprof {
namespace {

using testing::edges_of;
using testing::Family;
using testing::hg;
using testing::named;
using testing::rel;

constexpr const char* kExample =
    "((!x1 & !x2 & !x4) | (!x3 & !x4)) & ((!x1 & !x3) | (!x2 & !x5) | (!x1 & !x4 & !x5))";

std::vector<bool> identity_indicator(const RelationPair& p) {
  const auto n = p.r.num_attributes();
  std::vector<bool> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    AttrSet x;
    for (std::size_t i = 0; i < n; ++i)
      if (m >> i & 1) x.insert(i);
    out.push_back(is_ind(p.r, p.s, InclusionDependency::identity(x)));
  }
  return out;
}

std::vector<bool> formula_indicator(const NormalizedFormula& phi) {
  const auto n = phi.num_variables();
  std::vector<bool> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    Assignment a;
    for (std::size_t i = 0; i < n; ++i)
      if (m >> i & 1) a.insert(i);
    out.push_back(evaluate(phi, a));
  }
  return out;
}

TEST(FreshSymbolsTest, PrefixAvoidsTakenValues) {
  FreshSymbolPool plain;
  EXPECT_EQ(plain.next(), "!f0");
  EXPECT_EQ(plain.next(), "!f1");
  EXPECT_EQ(plain.issued(), 2u);

  FreshSymbolPool clash({"!f0"});
  EXPECT_EQ(clash.prefix(), "!f_");
  EXPECT_EQ(clash.next(), "!f_0");

  FreshSymbolPool deeper({"!f_x", "!f1"});
  EXPECT_EQ(deeper.prefix(), "!f__");

  const auto r = rel({"!f"}, {{"!f7"}});
  EXPECT_EQ(FreshSymbolPool::avoiding({&r}).prefix(), "!f_");
}

TEST(HsToUccTest, Examples) {
  const auto out = hs_to_ucc(hg({{"a", "b"}, {"b", "c"}}));
  EXPECT_EQ(out.schema(), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(out.rows(), (std::vector<Row>{{"0", "0", "0"}, {"1", "1", "0"}, {"0", "2", "2"}}));
  EXPECT_EQ(hs_to_ucc(hg({{"a"}})).rows(), (std::vector<Row>{{"0"}, {"1"}}));
  EXPECT_THROW(hs_to_ucc(Hypergraph{}), InputError);
  EXPECT_THROW(hs_to_ucc(hg({{}}, {"a"})), InputError);
}

TEST(HsToUccTest, MinimizesFirstAndPreservesTransversals) {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const auto h = random_hypergraph(seed, SizeBounds{1, 7, 10, false});
    const auto out = hs_to_ucc(h);
    ASSERT_EQ(out.num_rows(), minimize(h).num_edges() + 1) << "seed " << seed;
    ASSERT_EQ(minimal_difference_sets(out).sorted_edges(), minimize(h).sorted_edges()) << "seed " << seed;
    ASSERT_EQ(enumerate_minimal_uccs(out), minimal_transversals(h)) << "seed " << seed;
  }
}

TEST(UccToFdFixedTest, Examples) {
  const auto out = ucc_to_fd_fixed(rel({"x", "y"}, {{"0", "0"}, {"0", "1"}}));
  EXPECT_EQ(out.relation.schema(), (std::vector<std::string>{"x", "y", "a"}));
  EXPECT_EQ(out.relation.rows(), (std::vector<Row>{{"0", "0", "1"}, {"0", "1", "2"}}));
  EXPECT_EQ(out.rhs, 2u);

  const auto single = ucc_to_fd_fixed(rel({"a"}, {{"0"}}));
  EXPECT_EQ(single.relation.schema(), (std::vector<std::string>{"a", "_a"}));
  EXPECT_EQ(enumerate_minimal_fds_fixed(single.relation, single.rhs),
            (std::vector<FunctionalDependency>{{AttrSet{}, 1}}));
}

TEST(UccToFdFixedTest, MinimalFdsAreMinimalUccs) {
  SizeBounds b;
  b.max_attributes = 6;
  b.max_rows = 8;
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const auto r = random_relation(seed, b);
    const auto out = ucc_to_fd_fixed(r);
    std::vector<AttrSet> lhs;
    for (const auto& fd : enumerate_minimal_fds_fixed(out.relation, out.rhs)) lhs.push_back(fd.lhs);
    ASSERT_EQ(lhs, oracle_minimal_uccs(r)) << "seed " << seed;
  }
}

TEST(FdFixedToFdTest, Examples) {
  const auto out = fd_fixed_to_fd({rel({"a", "b"}, {{"0", "0"}, {"1", "1"}}), 0});
  EXPECT_EQ(out.rows(), (std::vector<Row>{{"0", "0"}, {"1", "1"}, {"0", "!f0"}}));
  for (const auto& fd : oracle_minimal_fds(out)) EXPECT_EQ(fd.rhs, 0u);

  EXPECT_THROW(fd_fixed_to_fd({rel({"a"}, {}), 0}), InputError);
  EXPECT_THROW(fd_fixed_to_fd({rel({"a"}, {{"0"}}), 1}), InputError);
}

TEST(FdFixedToFdTest, MasksFdsWithOtherRightHandSides) {
  // c -> b holds in the input; the fixed right-hand side is a.
  const auto in = rel({"a", "b", "c"}, {{"0", "0", "0"}, {"1", "0", "0"}, {"1", "1", "1"}});
  ASSERT_TRUE(is_valid_fd(in, {AttrSet{2}, 1}));
  const auto out = fd_fixed_to_fd({in, 0});
  EXPECT_EQ(out.num_rows(), in.num_rows() + in.num_attributes() - 1);
  EXPECT_FALSE(is_valid_fd(out, {AttrSet{2}, 1}));
  EXPECT_EQ(is_valid_fd(out, {AttrSet{1}, 0}), is_valid_fd(in, {AttrSet{1}, 0}));
  EXPECT_EQ(oracle_minimal_fds(out), oracle_minimal_fds_fixed(in, 0));
}

TEST(FdToCnfTest, Examples) {
  const auto r = rel({"a", "b"}, {{"0", "0"}, {"1", "0"}});
  const auto phi = fd_to_cnf(r);
  EXPECT_EQ(phi.variables(), (std::vector<std::string>{"x1", "x2", "y1", "y2"}));
  EXPECT_TRUE(phi.is_cnf());
  EXPECT_TRUE(weighted_sat(phi, 1));
  EXPECT_TRUE(evaluate(phi, Assignment{phi.variable("y2")}));
  EXPECT_FALSE(evaluate(phi, Assignment{phi.variable("y1"), phi.variable("x2")}));

  const auto decoded = decode_fd_assignment(r, Assignment{phi.variable("y2")});
  EXPECT_EQ(decoded.first, AttrSet{});
  EXPECT_EQ(decoded.second, AttrSet{1});
}

TEST(FdToCnfTest, DetectionCorrespondsAtShiftedBudget) {
  SizeBounds b;
  b.max_attributes = 5;
  b.max_rows = 6;
  const auto g = gadgets::fd_to_cnf();
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const auto r = random_relation(seed, b);
    const auto phi = fd_to_cnf(r);
    const auto n = r.num_attributes();
    const auto m = r.num_rows();
    ASSERT_LE(phi.blocks().size(), 1 + n + n * m * (m - (m > 0)) / 2) << "seed " << seed;
    for (std::size_t k = 0; k <= n; ++k)
      ASSERT_EQ(detect_fd(r, k), weighted_sat(phi, g.parameter_map(k))) << "seed " << seed << " k=" << k;
  }
}

TEST(DbToHypergraphUnionTest, Examples) {
  const auto hs = db_to_hypergraph_union(rel({"a", "b"}, {{"0", "0"}, {"1", "1"}}));
  ASSERT_EQ(hs.size(), 2u);
  EXPECT_EQ(edges_of(hs[0]), (Family{{"b"}}));
  EXPECT_EQ(edges_of(hs[1]), (Family{{"a"}}));

  const auto constant = db_to_hypergraph_union(rel({"a", "b"}, {{"0", "0"}, {"1", "0"}}));
  EXPECT_EQ(constant[1].num_edges(), 0u);
  EXPECT_EQ(minimal_transversals(constant[1]), (std::vector<VertexSet>{VertexSet{}}));
}

TEST(DbToHypergraphUnionTest, TaggedUnionGivesMinimalFds) {
  SizeBounds b;
  b.max_attributes = 6;
  b.max_rows = 8;
  const auto g = gadgets::db_to_hypergraph_union();
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const auto r = random_relation(seed, b);
    const auto hs = g.forward(r);
    std::vector<FunctionalDependency> back;
    for (const auto& t : transversal_union(hs)) back.push_back(g.solution_back(r, hs, t));
    std::sort(back.begin(), back.end());
    ASSERT_EQ(back, enumerate_minimal_fds(r)) << "seed " << seed;
  }
}

TEST(HypergraphUnionToDbTest, Examples) {
  const auto out = hypergraph_union_to_db({hg({{"a"}}), hg({{"a", "b"}})});
  EXPECT_EQ(out.schema(), (std::vector<std::string>{"a", "b", "x1", "x2"}));
  EXPECT_EQ(out.num_rows(), 5u);
  const auto fds = oracle_minimal_fds(out);
  EXPECT_EQ(fds, (std::vector<FunctionalDependency>{{AttrSet{0}, 2}, {AttrSet{0}, 3}, {AttrSet{1}, 3}}));
  EXPECT_THROW(hypergraph_union_to_db({}), InputError);
}

TEST(HypergraphUnionToDbTest, SharedEdgeGivesDistinctRows) {
  const auto out = hypergraph_union_to_db({hg({{"a"}}), hg({{"a"}})});
  EXPECT_EQ(out.num_rows(), 4u);
  EXPECT_EQ(out.rows()[1], (Row{"1", "1", "0"}));
  EXPECT_EQ(out.rows()[2], (Row{"2", "0", "1"}));
}

TEST(HypergraphUnionToDbTest, NoVertexIsARightHandSide) {
  SizeBounds b;
  b.max_vertices = 4;
  b.max_edges = 4;
  const auto g = gadgets::hypergraph_union_to_db();
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const std::vector<Hypergraph> hs{random_hypergraph(seed, b), random_hypergraph(seed + 1000, b)};
    const auto out = g.forward(hs);
    const auto padded = pad_to_common_universe(hs);
    const auto fds = oracle_minimal_fds(out, OracleBounds{12, 8, SIZE_MAX});
    for (const auto& fd : fds) ASSERT_GE(fd.rhs, padded[0].num_vertices()) << "seed " << seed;
    std::vector<TaggedTransversal> back;
    for (const auto& fd : fds) back.push_back(g.solution_back(hs, out, fd));
    std::sort(back.begin(), back.end());
    ASSERT_EQ(back, transversal_union(hs)) << "seed " << seed;
  }
}

TEST(IndIdentityToGeneralTest, Examples) {
  const auto none = ind_identity_to_general({rel({"a"}, {{"7"}}), rel({"a"}, {{"8"}})});
  EXPECT_FALSE(detect_ind(none.r, none.s, 1));

  const auto p = ind_identity_to_general({rel({"a", "b"}, {{"0", "1"}}), rel({"a", "b"}, {{"0", "2"}, {"5", "1"}})});
  std::vector<AttrSet> identity_maximal;
  for (const auto& d : enumerate_maximal_inds(p.r, p.s)) {
    EXPECT_TRUE(d.is_identity());
    identity_maximal.push_back(d.lhs_set());
  }
  EXPECT_EQ(named(p.r.schema(), identity_maximal), (Family{{"a"}, {"b"}}));

  const RelationPair cross{rel({"a", "b"}, {{"1", "0"}}), rel({"a", "b"}, {{"0", "1"}})};
  const auto a_to_b = InclusionDependency::from_pairs({{0, 1}});
  ASSERT_TRUE(is_ind(cross.r, cross.s, a_to_b));
  const auto out = ind_identity_to_general(cross);
  EXPECT_FALSE(is_ind(out.r, out.s, a_to_b));
  EXPECT_EQ(out.r.num_rows(), 2u);

  EXPECT_THROW(ind_identity_to_general({rel({"a"}, {}), rel({"b"}, {})}), InputError);
}

TEST(IndToWa3nsTest, Examples) {
  const RelationPair same{rel({"a"}, {{"7"}}), rel({"b"}, {{"7"}})};
  const auto phi = ind_to_wa3ns(same);
  EXPECT_TRUE(phi.is_antimonotone());
  EXPECT_TRUE(weighted_sat(phi, 1));

  const auto differ = ind_to_wa3ns({rel({"a"}, {{"7"}}), rel({"b"}, {{"8"}})});
  EXPECT_TRUE(weighted_sat(differ, 0));
  EXPECT_FALSE(weighted_sat(differ, 1));
}

TEST(IndToWa3nsTest, DecodeRejectsNonInjections) {
  const RelationPair p{rel({"a", "b"}, {}), rel({"c", "d"}, {})};
  const auto phi = ind_to_wa3ns(p);
  EXPECT_EQ(decode_ind_assignment(p, Assignment{phi.variable("x1_2")}), InclusionDependency::from_pairs({{0, 1}}));
  EXPECT_THROW(decode_ind_assignment(p, Assignment{phi.variable("x1_1"), phi.variable("x1_2")}), InputError);
  EXPECT_THROW(decode_ind_assignment(p, Assignment{phi.variable("x1_1"), phi.variable("x2_1")}), InputError);
}

TEST(IndToWa3nsTest, DetectionCorrespondsExhaustively) {
  SizeBounds b;
  b.max_attributes = 3;
  b.max_rows = 4;
  b.same_schema = false;
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const auto p = random_relation_pair(seed, b);
    const auto phi = ind_to_wa3ns(p);
    ASSERT_TRUE(phi.is_antimonotone());
    for (std::size_t k = 0; k <= phi.num_variables(); ++k)
      ASSERT_EQ(detect_ind(p.r, p.s, k), weighted_sat(phi, k)) << "seed " << seed << " k=" << k;
  }
}

TEST(ConjoinDbPairsTest, Examples) {
  const Row zeros{"0", "0", "0"};
  const RelationPair avoid_a{rel({"a", "b", "c"}, {zeros}), rel({"a", "b", "c"}, {{"1", "0", "0"}})};
  const RelationPair avoid_b{rel({"a", "b", "c"}, {zeros}), rel({"a", "b", "c"}, {{"0", "1", "0"}})};
  const auto both = conjoin_db_pairs({avoid_a, avoid_b});
  EXPECT_EQ(named(both.r.schema(), enumerate_maximal_inds_identity(both.r, both.s)), (Family{{"c"}}));
  EXPECT_EQ(both.r.num_rows(), 2u);
  EXPECT_EQ(both.s.num_rows(), 2u);

  const RelationPair always{rel({"a", "b", "c"}, {zeros}), rel({"a", "b", "c"}, {zeros, {"1", "1", "1"}})};
  EXPECT_EQ(identity_indicator(conjoin_db_pairs({avoid_a, always})), identity_indicator(avoid_a));

  EXPECT_THROW(conjoin_db_pairs({avoid_a, {rel({"a"}, {}), rel({"a"}, {})}}), InputError);
}

TEST(ConjoinDbPairsTest, IndicatorIsConjunctionAndSizesAdd) {
  SizeBounds b;
  b.max_rows = 5;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    b.min_attributes = b.max_attributes = 1 + seed % 5;
    const auto p1 = random_relation_pair(seed, b);
    const auto p2 = random_relation_pair(seed + 5000, b);
    const auto out = conjoin_db_pairs({p1, p2});
    EXPECT_EQ(out.r.num_rows(), p1.r.num_rows() + p2.r.num_rows());
    EXPECT_EQ(out.s.num_rows(), p1.s.num_rows() + p2.s.num_rows());
    const auto f1 = identity_indicator(p1);
    const auto f2 = identity_indicator(p2);
    const auto f = identity_indicator(out);
    for (std::size_t i = 0; i < f.size(); ++i) ASSERT_EQ(f[i], f1[i] && f2[i]) << "seed " << seed;
  }
}

TEST(DnfToDbPairTest, Examples) {
  const auto p = dnf_to_db_pair(parse_formula("((!x1) | (!x2 & !x3))"));
  EXPECT_EQ(p.r.schema(), (std::vector<std::string>{"a1", "a2", "a3"}));
  EXPECT_EQ(p.r.rows(), (std::vector<Row>{{"1", "0", "0"}, {"0", "2", "2"}}));
  EXPECT_EQ(p.s.rows(),
            (std::vector<Row>{{"!f0", "0", "0"}, {"!f0", "2", "2"}, {"1", "!f0", "!f0"}, {"0", "!f0", "!f0"}}));

  const auto with_true = dnf_to_db_pair(parse_formula("variables: x1,x2\n(true | !x1)"));
  for (bool bit : identity_indicator(with_true)) EXPECT_TRUE(bit);

  EXPECT_THROW(dnf_to_db_pair(parse_formula("(!x1) & (!x2)")), InputError);
  EXPECT_THROW(dnf_to_db_pair(parse_formula("(x1)")), InputError);
  EXPECT_THROW(dnf_to_db_pair(parse_formula("true")), InputError);
}

TEST(DnfToDbPairTest, AddingAnAttributeToAMaximalIndBreaksIt) {
  const auto phi = parse_formula("((!x1 & !x2) | (!x3) | (!x2 & !x4))");
  const auto p = dnf_to_db_pair(phi);
  EXPECT_EQ(identity_indicator(p), formula_indicator(phi));
  for (const auto& x : enumerate_maximal_inds_identity(p.r, p.s))
    for (std::size_t a = 0; a < p.r.num_attributes(); ++a) {
      if (x.contains(a)) continue;
      auto bigger = x;
      bigger.insert(a);
      EXPECT_FALSE(is_ind(p.r, p.s, InclusionDependency::identity(bigger)));
    }
}

TEST(DnfToDbPairTest, SizesAndIndicatorOnRandomDnfs) {
  SizeBounds b;
  b.max_variables = 7;
  b.max_blocks = 1;
  b.max_terms = 4;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    auto phi = random_formula(seed, b);
    const auto m = phi.blocks().front().size();
    const auto p = dnf_to_db_pair(phi);
    ASSERT_LE(p.r.num_rows(), m);
    ASSERT_LE(p.s.num_rows(), m * m);
    ASSERT_EQ(identity_indicator(p), formula_indicator(phi)) << "seed " << seed;
  }
}

TEST(Wa3nsToIndIdentityTest, Examples) {
  const auto phi = parse_formula(kExample);
  const auto p = wa3ns_to_ind_identity(phi);
  std::size_t largest = 0;
  for (const auto& x : enumerate_maximal_inds_identity(p.r, p.s)) largest = std::max(largest, x.size());
  EXPECT_EQ(largest, 2u);
  EXPECT_EQ(identity_indicator(p), formula_indicator(phi));
  EXPECT_EQ(enumerate_maximal_inds_identity(p.r, p.s), maximal_satisfying_assignments(phi));

  const auto single = parse_formula("((!x1) | (!x2 & !x3))");
  EXPECT_EQ(wa3ns_to_ind_identity(single), dnf_to_db_pair(single));

  const auto none = wa3ns_to_ind_identity(parse_formula("variables: x1\ntrue"));
  EXPECT_EQ(none.r.num_rows(), 0u);
  EXPECT_THROW(wa3ns_to_ind_identity(parse_formula("variables: x1\n(false)")), InputError);
}

TEST(Wa3nsToIndIdentityTest, GadgetTranslatesAssignments) {
  const auto g = gadgets::wa3ns_to_ind_identity();
  const auto phi = parse_formula(kExample);
  const auto p = g.forward(phi);
  for (const auto& x : enumerate_maximal_inds_identity(p.r, p.s)) EXPECT_EQ(g.solution_back(phi, p, x), x);
}

TEST(AttributeNamesTest, VariableRenaming) {
  EXPECT_EQ(attribute_names_for(parse_formula("(!x1 | !x12)")), (std::vector<std::string>{"a1", "a12"}));
  EXPECT_EQ(attribute_names_for(parse_formula("(!x1 | !a1)")), (std::vector<std::string>{"x1", "a1"}));
  EXPECT_EQ(attribute_names_for(parse_formula("(!p | !q)")), (std::vector<std::string>{"p", "q"}));
}

}  // namespace
}  // namespace depprof
