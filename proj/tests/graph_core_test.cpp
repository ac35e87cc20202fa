#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "sdiam/corpus.hpp"
#include "sdiam/families.hpp"
#include "sdiam/graph.hpp"
#include "sdiam/graph6.hpp"
#include "sdiam/isomorphism.hpp"
#include "sdiam/structure.hpp"

using namespace sdiam;

namespace {

Graph k13() { return generate(StarSpec{3}); }

}  // namespace

TEST(Graph6, DecodesKnownVectors) {
  EXPECT_EQ(from_graph6("A_"), complete_graph(2));
  EXPECT_EQ(from_graph6("Bw"), complete_graph(3));
  EXPECT_EQ(from_graph6("Bg"), Graph::from_edges(3, {{0, 1}, {1, 2}}));
}

TEST(Graph6, EncodesKnownVectors) {
  EXPECT_EQ(to_graph6(complete_graph(2)), "A_");
  EXPECT_EQ(to_graph6(Graph(1)), "@");
  EXPECT_EQ(to_graph6(complete_graph(3)), "Bw");
  EXPECT_EQ(to_graph6(path_graph(3)), "Bg");
}

TEST(Graph6, MatchesHandEncoderOnRandomGraphs) {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 40; ++n) {
    for (double p : {0.1, 0.5, 0.9}) {
      const Graph g = oracle::random_graph(n, p, rng);
      const std::string text = to_graph6(g);
      EXPECT_EQ(text, oracle::graph6(oracle::matrix(g)));
      EXPECT_EQ(from_graph6(text), g);
    }
  }
}

TEST(Graph6, RejectsMalformedInput) {
  EXPECT_THROW(from_graph6(""), decode_error);
  EXPECT_THROW(from_graph6("B"), decode_error);
  EXPECT_THROW(from_graph6("Bw?"), decode_error);
  EXPECT_THROW(from_graph6("B\x7f"), decode_error);
  try {
    from_graph6("Bw?");
    FAIL();
  } catch (const decode_error& e) {
    EXPECT_EQ(e.line(), 0u);
    EXPECT_EQ(e.at_line(5).line(), 5u);
  }
}

TEST(Graph6, AcceptsHeader) { EXPECT_EQ(from_graph6(">>graph6<<Bw"), complete_graph(3)); }

TEST(Graph, ConstructionValidates) {
  EXPECT_THROW(Graph(0), domain_error);
  EXPECT_THROW(Graph(65), domain_error);
  EXPECT_THROW(Graph::from_edges(3, {{0, 0}}), domain_error);
  EXPECT_THROW(Graph::from_edges(3, {{0, 3}}), domain_error);
  const std::uint64_t asym[] = {0b10, 0b00};
  EXPECT_THROW(Graph::from_rows(2, asym), domain_error);
}

TEST(Graph, Complement) {
  EXPECT_EQ(complete_graph(4).complement().size(), 0);
  EXPECT_TRUE(is_isomorphic(cycle_graph(5).complement(), cycle_graph(5)));
  EXPECT_TRUE(is_isomorphic(path_graph(4).complement(), path_graph(4)));
  EXPECT_FALSE(is_connected(k13().complement()));
  EXPECT_EQ(components(k13().complement()).size(), 2u);
}

TEST(Graph, Degrees) {
  EXPECT_EQ(min_degree(cycle_graph(5)), 2);
  EXPECT_EQ(max_degree(cycle_graph(5)), 2);
  EXPECT_EQ(min_degree(k13()), 1);
  EXPECT_EQ(max_degree(k13()), 3);
}

TEST(Structure, Connectivity) {
  EXPECT_TRUE(is_connected(path_graph(5)));
  const Graph two_k2 = Graph::from_edges(4, {{0, 1}, {2, 3}});
  EXPECT_FALSE(is_connected(two_k2));
  EXPECT_EQ(components(two_k2).size(), 2u);
}

TEST(Structure, CutVertices) {
  EXPECT_EQ(cut_vertices(path_graph(4)), (VertexSet{1, 2}));
  EXPECT_TRUE(cut_vertices(cycle_graph(5)).empty());
  // Star centre 0 and the middle vertex n-2 of the pendant path.
  EXPECT_EQ(cut_vertices(generate(StarPathSpec{6})), (VertexSet{0, 4}));
  EXPECT_THROW(cut_vertices(Graph::from_edges(4, {{0, 1}, {2, 3}})), domain_error);
}

TEST(Structure, VertexAndEdgeConnectivity) {
  EXPECT_EQ(vertex_connectivity(complete_graph(5)), 4);
  EXPECT_EQ(vertex_connectivity(cycle_graph(6)), 2);
  EXPECT_EQ(vertex_connectivity(path_graph(4)), 1);
  EXPECT_EQ(vertex_connectivity(Graph::from_edges(4, {{0, 1}, {2, 3}})), 0);
  EXPECT_EQ(edge_connectivity(generate(CompleteBipartiteSpec{3, 4})), 3);
  EXPECT_EQ(edge_connectivity(k13()), 1);
}

TEST(Structure, Circumference) {
  for (int n = 3; n <= 10; ++n) EXPECT_EQ(circumference(cycle_graph(n)), n);
  EXPECT_EQ(circumference(path_graph(6)), 0);
  EXPECT_EQ(circumference(generate(SpiderSpec{1, 2, 3})), 0);
  EXPECT_EQ(circumference(generate(TriangleSpiderSpec{1, 1, 1})), 3);
  EXPECT_EQ(circumference(complete_graph(7)), 7);
}

TEST(Structure, Distances) {
  const DistanceMatrix p4(path_graph(4));
  EXPECT_EQ(p4.at(0, 3), ExtLength::finite(3));
  const DistanceMatrix kst(generate(CompleteBipartiteSpec{2, 3}));
  EXPECT_EQ(kst.at(0, 2), ExtLength::finite(1));
  EXPECT_EQ(kst.at(0, 1), ExtLength::finite(2));
  EXPECT_EQ(DistanceMatrix(cycle_graph(6)).at(0, 3), ExtLength::finite(3));
  EXPECT_TRUE(DistanceMatrix(Graph::from_edges(4, {{0, 1}, {2, 3}})).at(0, 2).is_infinite());
}

TEST(Isomorphism, Examples) {
  EXPECT_TRUE(is_isomorphic(cycle_graph(5), cycle_graph(5).complement()));
  EXPECT_FALSE(is_isomorphic(path_graph(4), k13()));
  const Graph g = generate(SpiderSpec{1, 2, 2});
  EXPECT_TRUE(is_isomorphic(g, g));
}

TEST(Isomorphism, AgreesWithPermutationSearch) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 6;
    const Graph a = oracle::random_graph(n, 0.5, rng);
    const Graph b = oracle::random_graph(n, 0.5, rng);
    if (a.size() != b.size()) continue;
    EXPECT_EQ(is_isomorphic(a, b), oracle::isomorphic(oracle::matrix(a), oracle::matrix(b)))
        << to_graph6(a) << " " << to_graph6(b);
  }
}

TEST(Families, Sizes) {
  const Graph s = generate(SpiderSpec{1, 1, 1});
  EXPECT_EQ(s.order(), 4);
  EXPECT_TRUE(is_isomorphic(s, k13()));
  const Graph t = generate(TriangleSpiderSpec{0, 0, 1});
  EXPECT_EQ(t.order(), 4);
  EXPECT_EQ(t.size(), 4);
  const Graph e2 = generate(Example2Spec{complete_graph(6)});
  EXPECT_EQ(e2.order(), 10);
  EXPECT_EQ(e2.degree(6), 7);
  EXPECT_EQ(e2.degree(9), 7);
}

TEST(Families, RejectBadParameters) {
  EXPECT_THROW(generate(SpiderSpec{2, 1, 1}), parameter_error);
  EXPECT_THROW(generate(TriangleSpiderSpec{2, 1, 1}), parameter_error);
  EXPECT_THROW(generate(StarPathSpec{3}), parameter_error);
  EXPECT_THROW(parse_h2_pattern("XYZ"), parameter_error);
}

TEST(Corpus, LabeledCounts) {
  for (int n = 1; n <= 5; ++n) {
    std::size_t all = 0;
    for_each_labeled(n, false, [&](const Graph&) { ++all; });
    EXPECT_EQ(all, std::size_t{1} << (n * (n - 1) / 2));
  }
  EXPECT_EQ(enumerate_labeled(4, true).size(), 38u);
  EXPECT_EQ(enumerate_labeled(5, true).size(), 728u);
  EXPECT_THROW(enumerate_labeled(9, false), capacity_error);
}

TEST(Corpus, PrueferCounts) {
  EXPECT_EQ(enumerate_trees(3).size(), 3u);
  EXPECT_EQ(enumerate_trees(4).size(), 16u);
  EXPECT_EQ(enumerate_trees(5).size(), 125u);
  for (const Graph& t : enumerate_trees(6)) EXPECT_TRUE(is_tree(t));
}

TEST(Corpus, TreeCanonicalCodeSeparatesClasses) {
  // Unlabeled tree counts for n = 2..9.
  const std::size_t expected[] = {1, 1, 2, 3, 6, 11, 23, 47};
  for (int n = 2; n <= 9; ++n) {
    std::set<std::uint64_t> codes;
    for_each_tree(n, [&](const Graph& t) { codes.insert(tree_canonical_code(t)); });
    EXPECT_EQ(codes.size(), expected[n - 2]) << "n=" << n;
  }
  EXPECT_THROW(tree_canonical_code(cycle_graph(4)), domain_error);
}
