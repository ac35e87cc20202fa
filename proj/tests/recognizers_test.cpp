#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sdiam/corpus.hpp"
#include "sdiam/families.hpp"
#include "sdiam/graph6.hpp"
#include "sdiam/recognizers.hpp"
#include "sdiam/steiner.hpp"

using namespace sdiam;

namespace {

Graph c4_with_pendant() { return Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}}); }

// Two adjacent degree-3 vertices, each with two pendant leaves.
Graph caterpillar() { return generate(DoubleStarSpec{2, 2}); }

}  // namespace

TEST(DoubleStar, Examples) {
  EXPECT_TRUE(has_spanning_double_star(path_graph(4)));
  EXPECT_FALSE(has_spanning_double_star(cycle_graph(6)));
  for (int n = 2; n <= 8; ++n) EXPECT_TRUE(has_spanning_double_star(generate(StarSpec{n - 1})));
}

TEST(Sdiam2, Examples) {
  EXPECT_EQ(classify_sdiam2(complete_graph(5)).value(), 1);
  EXPECT_EQ(classify_sdiam2(cycle_graph(5)).value(), 2);
  EXPECT_EQ(steiner_diameter(cycle_graph(5), 2), ExtLength::finite(2));
  EXPECT_TRUE(classify_sdiam2(path_graph(6)).path);
  EXPECT_EQ(steiner_diameter(path_graph(6), 2), ExtLength::finite(5));
  EXPECT_THROW(classify_sdiam2(Graph::from_edges(4, {{0, 1}, {2, 3}})), domain_error);
}

TEST(Sdiam3Is2, Examples) {
  EXPECT_TRUE(sdiam3_is_2(cycle_graph(4)));
  EXPECT_EQ(steiner_diameter(cycle_graph(4), 3), ExtLength::finite(2));
  EXPECT_TRUE(sdiam3_is_2(complete_graph(5)));
  EXPECT_FALSE(sdiam3_is_2(path_graph(5)));
}

TEST(TripleStar, Examples) {
  EXPECT_TRUE(complement_has_spanning_triple_star(Graph(6)));
  EXPECT_FALSE(complement_has_spanning_triple_star(cycle_graph(5)));
  const Graph ts = generate(TripleStarSpec{0, 0, 3});
  EXPECT_TRUE(complement_has_spanning_triple_star(ts.complement()));
  EXPECT_THROW(complement_has_spanning_triple_star(Graph(3)), domain_error);
}

TEST(H2, Examples) {
  using P = H2Pattern;
  const std::vector<std::vector<P>> cases = {
      {P::UVW}, {P::UV}, {P::VW}, {P::UW}, {P::V}, {P::V, P::UW, P::UVW}, {P::UV, P::VW, P::V, P::V}};
  for (const auto& patterns : cases) {
    const Graph h = generate(H2Spec{patterns});
    EXPECT_TRUE(complement_has_spanning_H2(h.complement())) << to_graph6(h);
  }
  EXPECT_FALSE(complement_has_spanning_H2(cycle_graph(5)));
}

TEST(H2, StarComplementAgreesWithScan) {
  // The star K_{1,n-1} has a path u-v-w only through its centre v, and every
  // other leaf touches v, so the scan must find it.
  for (int n = 4; n <= 8; ++n) {
    const Graph star = generate(StarSpec{n - 1});
    EXPECT_TRUE(complement_has_spanning_H2(star.complement()));
  }
}

TEST(Sdiam3Is3, Examples) {
  EXPECT_TRUE(sdiam3_is_3(cycle_graph(5)));
  EXPECT_EQ(steiner_diameter(cycle_graph(5), 3), ExtLength::finite(3));
  EXPECT_TRUE(sdiam3_is_3(generate(Example2Spec{complete_graph(6)})));
  EXPECT_FALSE(sdiam3_is_3(complete_graph(5)));
}

TEST(Spider, Recognition) {
  EXPECT_EQ(recognize_spider(generate(StarSpec{3})), (SpiderParams{1, 1, 1}));
  const auto p6 = recognize_spider(path_graph(6));
  ASSERT_TRUE(p6);
  EXPECT_EQ(p6->a, 0);
  EXPECT_EQ(p6->b + p6->c, 5);
  EXPECT_FALSE(recognize_spider(caterpillar()));
  EXPECT_FALSE(recognize_spider(cycle_graph(5)));
  for (int a = 0; a <= 2; ++a)
    for (int b = std::max(a, 1); b <= 3; ++b)
      for (int c = b; c <= 3; ++c) {
        const auto got = recognize_spider(generate(SpiderSpec{a, b, c}));
        ASSERT_TRUE(got);
        if (a > 0) EXPECT_EQ(*got, (SpiderParams{a, b, c}));
      }
}

TEST(TriangleSpider, Recognition) {
  EXPECT_EQ(recognize_triangle_spider(complete_graph(3)), (TriangleSpiderParams{0, 0, 0}));
  EXPECT_EQ(recognize_triangle_spider(generate(TriangleSpiderSpec{1, 2, 3})), (TriangleSpiderParams{1, 2, 3}));
  EXPECT_FALSE(recognize_triangle_spider(c4_with_pendant()));
  EXPECT_FALSE(recognize_triangle_spider(complete_graph(4)));
}

TEST(Sdiam3IsNMinus1, Examples) {
  EXPECT_TRUE(sdiam3_is_n_minus_1(path_graph(7)));
  const Graph ts = generate(TriangleSpiderSpec{1, 1, 2});
  EXPECT_EQ(ts.order(), 7);
  EXPECT_TRUE(sdiam3_is_n_minus_1(ts));
  EXPECT_EQ(oracle::sdiam(oracle::matrix(ts), 3), 6);
  EXPECT_FALSE(sdiam3_is_n_minus_1(cycle_graph(6)));
  EXPECT_EQ(steiner_diameter(cycle_graph(6), 3), ExtLength::finite(4));
}

TEST(TreeLeafCriterion, Examples) {
  const Graph k15 = generate(StarSpec{5});
  EXPECT_FALSE(tree_leaf_criterion(k15, 3));
  EXPECT_TRUE(tree_leaf_criterion(k15, 5));
  const Graph s222 = generate(SpiderSpec{2, 2, 2});
  EXPECT_TRUE(tree_leaf_criterion(s222, 3));
  EXPECT_EQ(oracle::sdiam(oracle::matrix(s222), 3), 6);
  EXPECT_THROW(tree_leaf_criterion(cycle_graph(4), 2), domain_error);
  EXPECT_THROW(tree_leaf_criterion(k15, 7), domain_error);
}

TEST(Lem1, Examples) {
  for (int k = 2; k <= 6; ++k)
    EXPECT_TRUE(lem1_necessary_condition(complete_graph(6), k, steiner_diameter(complete_graph(6), k)));
  EXPECT_TRUE(lem1_necessary_condition(cycle_graph(5), 3, ExtLength::finite(3)));
  // A hypothetical value that would break the implication is reported.
  EXPECT_FALSE(lem1_necessary_condition(path_graph(5), 3, ExtLength::finite(2)));
}

TEST(Lem2, Examples) {
  EXPECT_EQ(circumference(cycle_graph(6)), 6);
  EXPECT_TRUE(lem2_circumference_bound(cycle_graph(6), steiner_diameter(cycle_graph(6), 3)));
  const Graph ts = generate(TriangleSpiderSpec{0, 0, 2});
  EXPECT_TRUE(lem2_circumference_bound(ts, steiner_diameter(ts, 3)));
  EXPECT_THROW(lem2_circumference_bound(cycle_graph(4), ExtLength::finite(2)), domain_error);
}

TEST(ClassifySdiam3, Examples) {
  EXPECT_EQ(classify_sdiam3(cycle_graph(5)).kind, Sdiam3Kind::Three);
  const Sdiam3Class p6 = classify_sdiam3(path_graph(6));
  EXPECT_EQ(p6.kind, Sdiam3Kind::NMinus1);
  ASSERT_TRUE(p6.spider);
  EXPECT_EQ(p6.spider->a, 0);
  EXPECT_EQ(classify_sdiam3(cycle_graph(4)).kind, Sdiam3Kind::Two);
  EXPECT_EQ(classify_sdiam3(cycle_graph(7)).kind, Sdiam3Kind::Other);
  EXPECT_THROW(classify_sdiam3(Graph::from_edges(4, {{0, 1}, {2, 3}})), domain_error);
}

// Each characterization against sdiam_3 from the exhaustive oracle.
TEST(ClassifySdiam3, AgreesWithOracleOnAllConnectedGraphsUpTo6) {
  for (int n = 3; n <= 6; ++n) {
    for_each_labeled(n, true, [&](const Graph& g) {
      const int d = oracle::sdiam(oracle::matrix(g), 3);
      EXPECT_EQ(sdiam3_is_2(g), d == 2) << to_graph6(g);
      if (n >= 4) EXPECT_EQ(sdiam3_is_3(g), d == 3) << to_graph6(g);
      EXPECT_EQ(sdiam3_is_n_minus_1(g), d == n - 1) << to_graph6(g);
    });
  }
}

TEST(ClassifySdiam3, AgreesWithOracleOnRandomGraphs) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 7 + trial % 4;
    const Graph g = oracle::random_connected(n, 0.25 + 0.1 * (trial % 6), rng);
    const ExtLength d = steiner_diameter(g, 3);
    EXPECT_EQ(sdiam3_is_2(g), d == 2);
    EXPECT_EQ(sdiam3_is_3(g), d == 3);
    EXPECT_EQ(sdiam3_is_n_minus_1(g), d == n - 1);
  }
}
