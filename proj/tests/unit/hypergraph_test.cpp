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

#include "depprof/hypergraph.hpp"

#include <gtest/gtest.h>

#include "depprof/errors.hpp"
#include "depprof/hypergraph_io.hpp"
#include "depprof/random_instance.hpp"
#include "test_support.hpp"

namespace depprof {
namespace {

using testing::edges_of;
using testing::Family;
using testing::hg;
using testing::named;

TEST(HypergraphTest, VerticesOrderedByFirstAppearance) {
  const auto h = hg({{"c", "a"}, {"b"}});
  EXPECT_EQ(h.vertices(), (std::vector<std::string>{"c", "a", "b"}));
}

TEST(HypergraphTest, DuplicateEdgesCollapse) {
  auto h = hg({{"a", "b"}, {"b", "a"}});
  EXPECT_EQ(h.num_edges(), 1u);
  EXPECT_FALSE(h.add_edge(VertexSet{0, 1}));
}

TEST(HypergraphTest, EdgeOutsideUniverseRejected) {
  Hypergraph h({"a"});
  EXPECT_THROW(h.add_edge(VertexSet{1}), InputError);
  EXPECT_THROW(Hypergraph({"a", "a"}), InputError);
}

TEST(HypergraphTest, EmptyEdgeAndIsolatedVertices) {
  auto h = hg({{}}, {"a", "b"});
  EXPECT_TRUE(h.has_empty_edge());
  EXPECT_EQ(h.isolated_vertices(), (VertexSet{0, 1}));
}

TEST(MinimizeTest, AbsorbsSupersets) {
  EXPECT_EQ(edges_of(minimize(hg({{"a"}, {"a", "b"}}))), (Family{{"a"}}));
}

TEST(MinimizeTest, EmptyGraphStaysEmpty) {
  const auto m = minimize(Hypergraph({"a"}));
  EXPECT_EQ(m.num_edges(), 0u);
  EXPECT_EQ(m.vertices(), (std::vector<std::string>{"a"}));
}

TEST(MinimizeTest, RemovesOnlyTheSupersetEdge) {
  const auto m = minimize(hg({{"a", "b"}, {"b", "c"}, {"a", "b", "c"}}));
  EXPECT_EQ(edges_of(m), (Family{{"a", "b"}, {"b", "c"}}));
  EXPECT_TRUE(m.is_sperner());
  EXPECT_EQ(m.num_vertices(), 3u);
}

TEST(HittingSetTest, Examples) {
  const auto h = hg({{"a", "b"}, {"b", "c"}});
  EXPECT_TRUE(is_hitting_set(h, VertexSet{1}));
  EXPECT_FALSE(is_hitting_set(h, VertexSet{0}));
  EXPECT_TRUE(is_hitting_set(Hypergraph{}, VertexSet{}));
  EXPECT_FALSE(is_hitting_set(hg({{}}, {"a"}), VertexSet{0}));
  EXPECT_THROW(is_hitting_set(h, VertexSet{5}), InputError);
}

TEST(HittingSetTest, OfExactSize) {
  EXPECT_TRUE(has_hitting_set_of_size(hg({{"a", "b"}, {"b", "c"}}), 1));
  EXPECT_FALSE(has_hitting_set_of_size(hg({{"a"}, {"c"}}), 1));
  EXPECT_TRUE(has_hitting_set_of_size(hg({{"a"}, {"c"}}), 2));
  EXPECT_FALSE(has_hitting_set_of_size(hg({{"a"}}, {"a", "b", "c"}), 4));
  EXPECT_TRUE(has_hitting_set_of_size(hg({{"a"}}, {"a", "b", "c"}), 3));
  EXPECT_FALSE(has_hitting_set_of_size(hg({{}}, {"a"}), 0));
  EXPECT_TRUE(has_hitting_set_of_size(Hypergraph({"a"}), 0));
}

TEST(TransversalTest, Examples) {
  const auto h = hg({{"a", "b"}, {"b", "c"}});
  EXPECT_EQ(named(h.vertices(), minimal_transversals(h)), (Family{{"a", "c"}, {"b"}}));
  EXPECT_EQ(minimal_transversals(Hypergraph({"a"})), (std::vector<VertexSet>{VertexSet{}}));
  EXPECT_TRUE(minimal_transversals(hg({{}}, {"a"})).empty());
}

TEST(TransversalTest, BruteForceExamples) {
  const auto h = hg({{"a", "b"}, {"b", "c"}});
  EXPECT_EQ(named(h.vertices(), brute_force_minimal_transversals(h)), (Family{{"a", "c"}, {"b"}}));
  EXPECT_EQ(named(std::vector<std::string>{"a"}, brute_force_minimal_transversals(hg({{"a"}}))), (Family{{"a"}}));
  const auto ab = hg({{"a", "b"}});
  EXPECT_EQ(named(ab.vertices(), brute_force_minimal_transversals(ab)), (Family{{"a"}, {"b"}}));
}

TEST(TransversalTest, BruteForceRefusesLargeUniverse) {
  std::vector<std::string> names;
  for (int i = 0; i < 21; ++i) names.push_back("v" + std::to_string(i));
  EXPECT_THROW(brute_force_minimal_transversals(Hypergraph(names)), RefusalError);
  EXPECT_NO_THROW(brute_force_minimal_transversals(Hypergraph(names), 21));
}

TEST(TransversalTest, StreamingStopsWhenVisitorDeclines) {
  const auto h = hg({{"a", "b"}, {"c", "d"}});
  int seen = 0;
  for_each_minimal_transversal(h, [&](const VertexSet&) { return ++seen < 2; });
  EXPECT_EQ(seen, 2);
}

TEST(TransversalTest, OrderIsDeterministic) {
  const auto h = random_hypergraph(77, SizeBounds{1, 7, 10});
  std::vector<VertexSet> first, second;
  for_each_minimal_transversal(h, [&](const VertexSet& t) { return first.push_back(t), true; });
  for_each_minimal_transversal(h, [&](const VertexSet& t) { return second.push_back(t), true; });
  EXPECT_EQ(first, second);
}

TEST(TransversalUnionTest, Examples) {
  const auto u = transversal_union({hg({{"a"}}), hg({{"a", "b"}})});
  EXPECT_EQ(u, (std::vector<TaggedTransversal>{{{0}, 0}, {{0}, 1}, {{1}, 1}}));
  const auto single = transversal_union({hg({{"a", "b"}, {"b", "c"}})});
  EXPECT_EQ(single, (std::vector<TaggedTransversal>{{{0, 2}, 0}, {{1}, 0}}));
  const auto degenerate = transversal_union({Hypergraph({"a"}), hg({{}}, {"a"})});
  EXPECT_EQ(degenerate, (std::vector<TaggedTransversal>{{{}, 0}}));
  EXPECT_THROW(transversal_union({}), InputError);
}

TEST(TransversalUnionTest, PadsToCommonUniverse) {
  const auto padded = pad_to_common_universe({hg({{"b"}}), hg({{"a"}})});
  EXPECT_EQ(padded[0].vertices(), (std::vector<std::string>{"b", "a"}));
  EXPECT_EQ(padded[1].vertices(), (std::vector<std::string>{"b", "a"}));
  EXPECT_EQ(edges_of(padded[1]), (Family{{"a"}}));
}

// Randomized invariants.

TEST(TransversalPropertyTest, MatchesBruteForceAndIsSperner) {
  for (std::uint64_t seed = 1000; seed < 1300; ++seed) {
    const auto h = random_hypergraph(seed, SizeBounds{1, 7, 12});
    const auto tr = minimal_transversals(h);
    auto oracle = brute_force_minimal_transversals(h);
    std::sort(oracle.begin(), oracle.end());
    ASSERT_EQ(tr, oracle) << "seed " << seed;
    Hypergraph as_graph(h.vertices());
    for (const auto& t : tr) {
      ASSERT_TRUE(is_hitting_set(h, t));
      as_graph.add_edge(t);
    }
    ASSERT_TRUE(as_graph.is_sperner());
    ASSERT_EQ(as_graph.num_edges(), tr.size()) << "duplicate emission, seed " << seed;
  }
}

TEST(TransversalPropertyTest, MinimizationPreservesTransversals) {
  for (std::uint64_t seed = 1; seed < 300; ++seed) {
    const auto h = random_hypergraph(seed, SizeBounds{1, 8, 12});
    ASSERT_EQ(minimal_transversals(minimize(h)), minimal_transversals(h)) << "seed " << seed;
  }
}

TEST(TransversalPropertyTest, DoubleTransversalIsMinimization) {
  int checked = 0;
  for (std::uint64_t seed = 1; seed < 400; ++seed) {
    const auto m = minimize(random_hypergraph(seed, SizeBounds{1, 7, 8, false}));
    if (!m.isolated_vertices().empty()) continue;
    ++checked;
    const auto back = transversal_hypergraph(transversal_hypergraph(m));
    ASSERT_EQ(back.sorted_edges(), m.sorted_edges()) << "seed " << seed;
  }
  EXPECT_GT(checked, 20);
}

TEST(HypergraphIoTest, TextRoundTrip) {
  const auto h = hg({{"a", "b"}, {}, {"c"}}, {"a", "b", "c", "d"});
  const auto text = hypergraph_to_text(h);
  EXPECT_EQ(text, "vertices:a,b,c,d\na,b\n{}\nc\n");
  EXPECT_EQ(parse_hypergraph_text(text), h);
  EXPECT_EQ(hypergraph_to_text(parse_hypergraph_text(text)), text);
}

TEST(HypergraphIoTest, CommentsAndBlankLines) {
  const auto h = parse_hypergraph_text("# graph\n\n a , b \nb,c\n");
  EXPECT_EQ(edges_of(h), (Family{{"a", "b"}, {"b", "c"}}));
}

TEST(HypergraphIoTest, JsonRoundTrip) {
  const auto h = hg({{"a", "b"}, {}}, {"a", "b", "z"});
  const auto json = hypergraph_to_json(h);
  EXPECT_EQ(json, R"({"vertices":["a","b","z"],"edges":[["a","b"],[]]})");
  EXPECT_EQ(hypergraph_from_json(json), h);
}

TEST(HypergraphIoTest, RejectsUnrepresentableNames) {
  EXPECT_THROW(hypergraph_to_text(Hypergraph({"a,b"})), InputError);
  EXPECT_THROW(hypergraph_from_json("{\"edges\":[[1]]}"), InputError);
  EXPECT_THROW(hypergraph_from_json("not json"), InputError);
}

}  // namespace
}  // namespace depprof
