//
// SPDX-License-Identifier: Apache-2.0
//

#include "lgm/core.hpp"

#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "lgm/ingest.hpp"
#include "lgm/synthetic.hpp"
#include "testing.hpp"

namespace lgm {
namespace {

TEST(EdgeOrder, Examples) {
  EXPECT_TRUE(edge_order_less(Edge{1, 3}, Edge{2, 3}));
  EXPECT_TRUE(edge_order_less(Edge{2, 5}, Edge{2, 7}));
  EXPECT_FALSE(edge_order_less(Edge{3, 4}, Edge{3, 4}));
  EXPECT_FALSE(edge_order_less(Edge{2, 3}, Edge{1, 3}));
  // labels do not participate
  EXPECT_FALSE(edge_order_less(Edge{0, 1, 0}, Edge{0, 1, 5}));
}

TEST(EdgeOrder, StrictTotalOrder) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<VertexId> v(0, 9);
  auto random_edge = [&] {
    VertexId a = v(rng), b = v(rng);
    while (a == b)
      b = v(rng);
    return Edge::make(a, b);
  };
  for (int trial = 0; trial < 20000; ++trial) {
    Edge a = random_edge(), b = random_edge(), c = random_edge();
    const bool same = a.left == b.left && a.right == b.right;
    const int relations = edge_order_less(a, b) + edge_order_less(b, a) + same;
    ASSERT_EQ(relations, 1);
    if (edge_order_less(a, b) && edge_order_less(b, c)) {
      ASSERT_TRUE(edge_order_less(a, c));
    }
  }
}

TEST(LargestEdge, Examples) {
  Pattern tri({0, 0, 0}, {Edge{0, 1}, Edge{0, 2}, Edge{1, 2}});
  EXPECT_EQ(largest_edge(tri), (Edge{1, 2}));
  EXPECT_EQ(largest_edge(Pattern{}), std::nullopt);
  Pattern two({0, 0, 0, 0}, {Edge{0, 3}, Edge{1, 2}});
  EXPECT_EQ(largest_edge(two), (Edge{1, 2}));
}

TEST(LinearGraph, RejectsMalformedEdges) {
  EXPECT_THROW(LinearGraph(0, {0, 0}, {Edge{1, 1}}), InvalidGraph);
  EXPECT_THROW(LinearGraph(0, {0, 0}, {Edge{0, 2}}), InvalidGraph);
  EXPECT_THROW(LinearGraph(0, {0, 0}, {Edge{0, 1}, Edge{1, 0}}), InvalidGraph);
}

TEST(LinearGraph, NormalizesAndSortsEdges) {
  LinearGraph g(3, {0, 1, 2}, {Edge{2, 1, 4}, Edge{1, 0, 5}});
  ASSERT_EQ(g.edges().size(), 2u);
  EXPECT_EQ(g.edges()[0], (Edge{0, 1, 5}));
  EXPECT_EQ(g.edges()[1], (Edge{1, 2, 4}));
  EXPECT_EQ(g.edge_label(2, 1), 4u);
  EXPECT_EQ(g.edge_label(0, 2), std::nullopt);
  ASSERT_EQ(g.neighbors(1).size(), 2u);
  EXPECT_EQ(g.neighbors(1)[0].vertex, 0u);
}

TEST(Pattern, EnforcesCanonicalForm) {
  EXPECT_NO_THROW(Pattern({0, 0}, {Edge{0, 1}}));
  EXPECT_THROW(Pattern({0, 0, 0}, {Edge{0, 1}}), InvalidGraph);
  EXPECT_THROW(Pattern({0, 0, 0}, {Edge{1, 2}, Edge{0, 1}}), InvalidGraph);
  EXPECT_THROW(Pattern({0, 0}, {Edge{0, 1}, Edge{0, 1}}), InvalidGraph);
  EXPECT_EQ(Pattern{}.size(), 0u);
}

TEST(MatchPattern, EmptyPatternHasOneEmptyEmbedding) {
  LinearGraph g(4, {0, 1}, {Edge{0, 1}});
  auto occ = match_pattern(Pattern{}, g);
  ASSERT_EQ(occ.size(), 1u);
  EXPECT_EQ(occ[0].graph_id, 4u);
  EXPECT_TRUE(occ[0].mapping.empty());
}

TEST(MatchPattern, SingleEdgeInTriangle) {
  Database db;
  auto a = db.vertex_labels.intern("A"), b = db.vertex_labels.intern("B");
  LinearGraph g(0, {a, b, a}, {Edge{0, 1}, Edge{1, 2}, Edge{0, 2}});
  Pattern ab({a, b}, {Edge{0, 1}});
  auto occ = match_pattern(ab, g);
  ASSERT_EQ(occ.size(), 1u);
  EXPECT_EQ(occ[0].mapping, (std::vector<VertexId>{0, 1}));
  EXPECT_EQ(testing::brute_force_embeddings(ab, g),
            (std::vector<std::vector<VertexId>>{{0, 1}}));
}

TEST(MatchPattern, PatternLargerThanGraph) {
  Pattern path({0, 0, 0}, {Edge{0, 1}, Edge{1, 2}});
  LinearGraph g(0, {0, 0}, {Edge{0, 1}});
  EXPECT_TRUE(match_pattern(path, g).empty());
}

TEST(MatchPattern, OrderMatters) {
  // A-B does not embed in B-A: the mapping must be increasing.
  LinearGraph g(0, {1, 0}, {Edge{0, 1}});
  EXPECT_TRUE(match_pattern(Pattern({0, 1}, {Edge{0, 1}}), g).empty());
  EXPECT_EQ(match_pattern(Pattern({1, 0}, {Edge{0, 1}}), g).size(), 1u);
}

TEST(MatchPattern, AgreesWithExhaustiveEnumeration) {
  synthetic::Rng rng(11);
  synthetic::RandomDatabaseOptions opt;
  opt.max_edge_labels = 2;
  for (int trial = 0; trial < 300; ++trial) {
    auto db = synthetic::random_database(rng, opt);
    const auto &host = db.graphs[0];
    for (const auto &data : db.graphs) {
      auto g = testing::random_subpattern(rng, host, 4);
      auto got = match_pattern(g, data);
      auto want = testing::brute_force_embeddings(g, data);
      if (g.empty())
        want = {{}};
      ASSERT_EQ(got.size(), want.size());
      for (std::size_t i = 0; i < got.size(); ++i) {
        ASSERT_EQ(got[i].mapping, want[i]);
        ASSERT_TRUE(testing::is_embedding(g, data, got[i].mapping));
      }
    }
  }
}

TEST(MatchPattern, SubgraphRelationIsReflexiveAndTransitive) {
  synthetic::Rng rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    auto db = synthetic::random_database(rng);
    const auto &g3 = db.graphs[0];
    if (g3.edge_count() == 0)
      continue;
    auto p3 = testing::random_subpattern(rng, g3, 6);
    EXPECT_TRUE(occurs_in(p3, p3.to_graph()));
    auto p2 = testing::random_subpattern(rng, p3.to_graph(), 4);
    auto p1 = testing::random_subpattern(rng, p2.to_graph(), 2);
    ASSERT_TRUE(occurs_in(p1, p2.to_graph()));
    ASSERT_TRUE(occurs_in(p2, p3.to_graph()));
    ASSERT_TRUE(occurs_in(p1, p3.to_graph()));
  }
}

TEST(CanonicalCode, EmptyPatternSentinel) {
  EXPECT_EQ(canonical_code(Pattern{}), std::string(8, '\0'));
}

TEST(CanonicalCode, EdgeLabelDistinguishes) {
  Pattern a({0, 1}, {Edge{0, 1, 0}});
  Pattern b({0, 1}, {Edge{0, 1, 1}});
  EXPECT_NE(canonical_code(a), canonical_code(b));
}

TEST(CanonicalCode, RoundTripsRandomPatterns) {
  synthetic::Rng rng(13);
  synthetic::RandomDatabaseOptions opt;
  opt.max_edge_labels = 3;
  for (int trial = 0; trial < 500; ++trial) {
    auto db = synthetic::random_database(rng, opt);
    auto g = testing::random_subpattern(rng, db.graphs[0], 8);
    auto code = canonical_code(g);
    ASSERT_EQ(decode_pattern(code), g);
    auto h = testing::random_subpattern(rng, db.graphs[0], 8);
    ASSERT_EQ(code == canonical_code(h), g == h);
  }
  EXPECT_THROW(decode_pattern("abc"), InvalidGraph);
}

TEST(Alphabet, ReservesUnlabeledAndValidatesTokens) {
  auto edges = Alphabet::for_edges();
  EXPECT_EQ(edges.find("_"), kUnlabeled);
  EXPECT_EQ(edges.intern("x"), 1u);
  EXPECT_EQ(edges.intern("x"), 1u);
  EXPECT_THROW(edges.intern(""), InvalidGraph);
  EXPECT_THROW(edges.intern("a b"), InvalidGraph);
}

} // namespace
} // namespace lgm
