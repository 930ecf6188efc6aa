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

#include "depprof/discovery.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <bit>

#include "depprof/errors.hpp"
#include "depprof/formula_io.hpp"
#include "depprof/oracle.hpp"
#include "depprof/random_instance.hpp"
#include "depprof/reductions.hpp"
#include "test_support.hpp"

namespace depprof {
namespace {

using testing::Family;
using testing::named;
using testing::rel;

Relation three_rows() { return rel({"a", "b", "c"}, {{"0", "0", "0"}, {"1", "1", "0"}, {"0", "2", "2"}}); }

TEST(DetectUccTest, Examples) {
  EXPECT_TRUE(detect_ucc(three_rows(), 1));
  EXPECT_FALSE(detect_ucc(three_rows(), 0));
  EXPECT_TRUE(detect_ucc(rel({"a"}, {{"0"}}), 0));
  EXPECT_FALSE(detect_ucc(three_rows(), 4));
}

TEST(DetectFdFixedTest, Examples) {
  EXPECT_TRUE(detect_fd_fixed(rel({"a", "b"}, {{"0", "0"}, {"1", "1"}}), 1, 1));
  EXPECT_FALSE(detect_fd_fixed(rel({"a", "b"}, {{"0", "0"}, {"1", "0"}, {"0", "1"}}), 0, 1));
  EXPECT_TRUE(detect_fd_fixed(rel({"a", "b"}, {{"0", "0"}, {"1", "0"}}), 1, 0));
  EXPECT_FALSE(detect_fd_fixed(rel({"a", "b"}, {{"0", "0"}}), 1, 2));
  EXPECT_THROW(detect_fd_fixed(rel({"a"}, {}), 3, 0), InputError);
}

TEST(DetectFdTest, Examples) {
  EXPECT_TRUE(detect_fd(rel({"a", "b"}, {{"0", "0"}, {"1", "0"}}), 0));
  EXPECT_TRUE(detect_fd(rel({"a", "b"}, {{"0", "0"}, {"1", "1"}}), 1));
  EXPECT_FALSE(detect_fd(rel({"a", "b"}, {{"0", "0"}, {"0", "1"}, {"1", "0"}, {"1", "1"}}), 1));
  EXPECT_FALSE(detect_fd(rel({"a", "b"}, {{"0", "0"}}), 2));
}

TEST(DetectIndTest, Examples) {
  const auto r = rel({"a", "b"}, {{"0", "1"}});
  const auto s = rel({"a", "b"}, {{"0", "2"}, {"5", "1"}});
  EXPECT_TRUE(detect_ind_identity(r, s, 1));
  EXPECT_FALSE(detect_ind_identity(r, s, 2));
  EXPECT_TRUE(detect_ind_identity(r, s, 0));
  EXPECT_TRUE(detect_ind(r, s, 0));

  const auto ra = rel({"a"}, {{"7"}});
  const auto sb = rel({"b"}, {{"7"}});
  EXPECT_TRUE(detect_ind(ra, sb, 1));
  EXPECT_THROW(detect_ind_identity(ra, sb, 1), InputError);
}

TEST(DetectionQueryTest, ValidatesFixedRhsPresence) {
  DetectionQuery q{DetectionKind::kFdFixedRhs, 1, std::nullopt};
  EXPECT_THROW(q.validate(), InputError);
  q.fixed_rhs = "b";
  EXPECT_NO_THROW(q.validate());
  EXPECT_TRUE(run_detection(q, rel({"a", "b"}, {{"0", "0"}, {"1", "1"}})));
  EXPECT_THROW((DetectionQuery{DetectionKind::kUcc, 0, "b"}.validate()), InputError);
  EXPECT_THROW(run_detection({DetectionKind::kInd, 0, std::nullopt}, rel({"a"}, {})), InputError);
}

TEST(EnumerateUccsTest, Examples) {
  const auto r = three_rows();
  EXPECT_EQ(named(r.schema(), enumerate_minimal_uccs(r)), (Family{{"a", "c"}, {"b"}}));
  EXPECT_EQ(enumerate_minimal_uccs(rel({"a", "b"}, {{"0", "0"}})), (std::vector<AttrSet>{AttrSet{}}));
  // Both columns repeat values but their pairs are distinct.
  const auto fig = rel({"a", "b"}, {{"0", "0"}, {"0", "1"}, {"1", "0"}});
  EXPECT_EQ(named(fig.schema(), enumerate_minimal_uccs(fig)), (Family{{"a", "b"}}));
}

TEST(EnumerateFdsTest, Examples) {
  EXPECT_EQ(enumerate_minimal_fds(rel({"a", "b"}, {{"0", "0"}, {"1", "0"}})),
            (std::vector<FunctionalDependency>{{AttrSet{}, 1}}));
  EXPECT_EQ(enumerate_minimal_fds(rel({"a", "b"}, {{"0", "0"}, {"1", "1"}})),
            (std::vector<FunctionalDependency>{{AttrSet{1}, 0}, {AttrSet{0}, 1}}));

  const auto fig = rel({"a", "b", "c"}, {{"0", "0", "5"}, {"1", "0", "5"}, {"0", "1", "6"}, {"1", "1", "6"}});
  const auto fds = enumerate_minimal_fds_fixed(fig, 2);
  EXPECT_EQ(fds, (std::vector<FunctionalDependency>{{AttrSet{1}, 2}}));
  EXPECT_THROW(enumerate_minimal_fds_fixed(fig, 3), InputError);
}

TEST(EnumerateIndsTest, Examples) {
  const auto r = rel({"a", "b"}, {{"0", "1"}});
  const auto s = rel({"a", "b"}, {{"0", "2"}, {"5", "1"}});
  EXPECT_EQ(named(r.schema(), enumerate_maximal_inds_identity(r, s)), (Family{{"a"}, {"b"}}));

  const auto empty_r = rel({"a", "b"}, {});
  EXPECT_EQ(enumerate_maximal_inds_identity(empty_r, s), (std::vector<AttrSet>{AttrSet{0, 1}}));
  const auto general = enumerate_maximal_inds(empty_r, s);
  EXPECT_EQ(general, (std::vector<InclusionDependency>{InclusionDependency::from_pairs({{0, 0}, {1, 1}}),
                                                       InclusionDependency::from_pairs({{0, 1}, {1, 0}})}));
  EXPECT_THROW(enumerate_maximal_inds_identity(rel({"a"}, {}), rel({"b"}, {})), InputError);
}

TEST(EnumerateIndsTest, DnfInstance) {
  const auto p = dnf_to_db_pair(parse_formula("((!x1) | (!x2 & !x3))"));
  EXPECT_EQ(named(p.r.schema(), enumerate_maximal_inds_identity(p.r, p.s)), (Family{{"a1"}, {"a2", "a3"}}));
}

TEST(EnumerateIndsTest, MaximalIndsMayShareOrNestDomains) {
  // (a->c) and (a->d, b->c) are both maximal.
  const auto r = rel({"a", "b"}, {{"1", "2"}});
  const auto s = rel({"c", "d"}, {{"1", "9"}, {"2", "1"}});
  const auto max = enumerate_maximal_inds(r, s);
  EXPECT_EQ(max, oracle_maximal_inds(r, s));
  EXPECT_NE(std::find(max.begin(), max.end(), InclusionDependency::from_pairs({{0, 0}})), max.end());
  EXPECT_NE(std::find(max.begin(), max.end(), InclusionDependency::from_pairs({{0, 1}, {1, 0}})), max.end());
}

TEST(IdentityIndFormulaTest, BlocksPerRowTermsPerRow) {
  const auto r = rel({"a", "b"}, {{"0", "1"}});
  const auto s = rel({"a", "b"}, {{"0", "2"}, {"5", "1"}});
  const auto phi = identity_ind_formula(r, s);
  EXPECT_EQ(phi.variables(), r.schema());
  EXPECT_EQ(formula_to_text(phi), "variables: a,b\n(!b | !a)");
}

// Brute-force equivalence at desk scale.

SizeBounds desk_bounds() {
  SizeBounds b;
  b.max_attributes = 6;
  b.max_rows = 8;
  return b;
}

TEST(DiscoveryPropertyTest, UccsAndFdsMatchBruteForce) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const auto r = random_relation(seed, desk_bounds());
    const auto uccs = enumerate_minimal_uccs(r);
    ASSERT_EQ(uccs, oracle_minimal_uccs(r)) << "seed " << seed;
    for (const auto& u : uccs) ASSERT_TRUE(is_ucc(r, u));
    const auto fds = enumerate_minimal_fds(r);
    ASSERT_EQ(fds, oracle_minimal_fds(r)) << "seed " << seed;
    for (const auto& fd : fds) ASSERT_TRUE(is_valid_fd(r, fd) && !fd.is_trivial());
    for (std::size_t a = 0; a < r.num_attributes(); ++a)
      ASSERT_EQ(enumerate_minimal_fds_fixed(r, a), oracle_minimal_fds_fixed(r, a)) << "seed " << seed;
  }
}

TEST(DiscoveryPropertyTest, DetectionMatchesBruteForce) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const auto r = random_relation(seed, desk_bounds());
    const auto n = r.num_attributes();
    const auto fd_sizes = oracle_fd_sizes(r);
    for (std::size_t k = 0; k <= n + 1; ++k) {
      bool ucc = false;
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << n) && !ucc; ++m) {
        if (static_cast<std::size_t>(std::popcount(m)) != k) continue;
        AttrSet u;
        for (std::size_t i = 0; i < n; ++i)
          if (m >> i & 1) u.insert(i);
        ucc = is_ucc(r, u);
      }
      ASSERT_EQ(detect_ucc(r, k), ucc) << "seed " << seed << " k=" << k;
      ASSERT_EQ(detect_fd(r, k), k < fd_sizes.size() && fd_sizes[k]) << "seed " << seed << " k=" << k;
    }
  }
}

TEST(DiscoveryPropertyTest, IndsMatchBruteForce) {
  SizeBounds same;
  same.max_attributes = 5;
  same.max_rows = 6;
  SizeBounds different = same;
  different.max_attributes = 4;
  different.same_schema = false;
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const auto p = random_relation_pair(seed, same);
    const auto ids = enumerate_maximal_inds_identity(p.r, p.s);
    ASSERT_EQ(ids, oracle_maximal_identity_inds(p.r, p.s)) << "seed " << seed;
    const auto all_ids = oracle_identity_inds(p.r, p.s);
    for (std::size_t k = 0; k <= p.r.num_attributes() + 1; ++k) {
      const bool any = std::any_of(all_ids.begin(), all_ids.end(), [&](const AttrSet& x) { return x.size() == k; });
      ASSERT_EQ(detect_ind_identity(p.r, p.s, k), any) << "seed " << seed;
    }

    const auto q = random_relation_pair(seed, different);
    const auto inds = enumerate_maximal_inds(q.r, q.s);
    ASSERT_EQ(inds, oracle_maximal_inds(q.r, q.s)) << "seed " << seed;
    for (std::size_t i = 0; i < inds.size(); ++i) {
      ASSERT_TRUE(is_ind(q.r, q.s, inds[i]));
      for (std::size_t j = 0; j < inds.size(); ++j)
        if (i != j) ASSERT_FALSE(inds[i].precedes_or_equal(inds[j]));
    }
    const auto all = oracle_inds(q.r, q.s);
    for (std::size_t k = 0; k <= q.r.num_attributes() + 1; ++k) {
      const bool any =
          std::any_of(all.begin(), all.end(), [&](const InclusionDependency& d) { return d.size() == k; });
      ASSERT_EQ(detect_ind(q.r, q.s, k), any) << "seed " << seed;
    }
  }
}

TEST(DiscoveryPropertyTest, IdentityIndsAgreeWithFormulaRoute) {
  SizeBounds b;
  b.max_attributes = 6;
  b.max_rows = 6;
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const auto p = random_relation_pair(seed, b);
    const auto via_formula = maximal_satisfying_assignments(identity_ind_formula(p.r, p.s));
    if (p.s.num_rows() == 0 && p.r.num_rows() > 0) {
      // Every block is empty; only the empty IND holds.
      ASSERT_TRUE(via_formula.empty());
      ASSERT_EQ(enumerate_maximal_inds_identity(p.r, p.s), (std::vector<AttrSet>{AttrSet{}}));
      continue;
    }
    ASSERT_EQ(enumerate_maximal_inds_identity(p.r, p.s), via_formula) << "seed " << seed;
    ASSERT_EQ(via_formula, oracle_maximal_identity_inds(p.r, p.s)) << "seed " << seed;
  }
}

TEST(DiscoveryPropertyTest, StreamsStopEarly) {
  const auto r = three_rows();
  int seen = 0;
  for_each_minimal_ucc(r, [&](const AttrSet&) { return ++seen < 1; });
  EXPECT_EQ(seen, 1);
  seen = 0;
  for_each_minimal_fd(r, [&](const FunctionalDependency&) { return ++seen < 2; });
  EXPECT_EQ(seen, 2);
}

}  // namespace
}  // namespace depprof
