// Invariants over fixed-seed random inputs, each checked against the slow
// reference implementations in oracles.hpp.

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "sdiam/corpus.hpp"
#include "sdiam/families.hpp"
#include "sdiam/graph6.hpp"
#include "sdiam/nordhaus_gaddum.hpp"
#include "sdiam/recognizers.hpp"
#include "sdiam/steiner.hpp"
#include "sdiam/structure.hpp"

using namespace sdiam;

namespace {

constexpr int kCases = 200;

Graph sample(std::mt19937_64& rng, int lo, int hi) {
  std::uniform_int_distribution<int> order(lo, hi);
  std::uniform_real_distribution<double> density(0.15, 0.85);
  return oracle::random_graph(order(rng), density(rng), rng);
}

// Standard leaf-removal encoding, for checking the decoder.
std::vector<int> pruefer_of(const Graph& t) {
  const int n = t.order();
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = t.degree(v);
  std::vector<bool> gone(n, false);
  std::vector<int> seq;
  for (int step = 0; step < n - 2; ++step) {
    int leaf = 0;
    while (gone[leaf] || deg[leaf] != 1) ++leaf;
    for (int w : t.neighbors(leaf)) {
      if (!gone[w]) {
        seq.push_back(w);
        --deg[w];
      }
    }
    gone[leaf] = true;
  }
  return seq;
}

}  // namespace

TEST(GraphProperties, CodecComplementDegreeSum) {
  std::mt19937_64 rng(101);
  for (int i = 0; i < kCases; ++i) {
    const Graph g = sample(rng, 1, 30);
    EXPECT_EQ(from_graph6(to_graph6(g)), g);
    EXPECT_EQ(g.complement().complement(), g);
    EXPECT_EQ(g.size() + g.complement().size(), g.order() * (g.order() - 1) / 2);
    int sum = 0;
    for (int v = 0; v < g.order(); ++v) sum += g.degree(v);
    EXPECT_EQ(sum, 2 * g.size());
  }
}

TEST(GraphProperties, WhitneyChainAndCutVertices) {
  std::mt19937_64 rng(102);
  for (int i = 0; i < kCases; ++i) {
    const Graph g = sample(rng, 2, 9);
    const auto a = oracle::matrix(g);
    const int kappa = vertex_connectivity(g);
    const int lambda = edge_connectivity(g);
    EXPECT_EQ(kappa, oracle::kappa(a)) << to_graph6(g);
    EXPECT_EQ(lambda, oracle::lambda(a)) << to_graph6(g);
    EXPECT_LE(kappa, lambda);
    EXPECT_LE(lambda, min_degree(g));
    if (!is_connected(g)) continue;
    EXPECT_EQ(cut_vertices(g).to_vector(), oracle::cut_vertices(a)) << to_graph6(g);
    if (g.order() >= 3) EXPECT_EQ(is_2_connected(g), cut_vertices(g).empty());
  }
}

TEST(GraphProperties, CircumferenceMatchesPathSearch) {
  std::mt19937_64 rng(103);
  for (int i = 0; i < kCases; ++i) {
    const Graph g = sample(rng, 1, 9);
    EXPECT_EQ(circumference(g), oracle::circumference(oracle::matrix(g))) << to_graph6(g);
  }
}

TEST(GraphProperties, PrueferRoundTrip) {
  std::mt19937_64 rng(104);
  for (int i = 0; i < kCases; ++i) {
    const int n = 2 + i % 15;
    std::uniform_int_distribution<int> entry(0, n - 1);
    std::vector<int> seq(n - 2);
    for (int& x : seq) x = entry(rng);
    const Graph t = tree_from_pruefer(n, seq);
    ASSERT_TRUE(is_tree(t));
    EXPECT_EQ(pruefer_of(t), seq);
  }
  std::set<std::string> distinct;
  for_each_tree(6, [&](const Graph& t) { distinct.insert(to_graph6(t)); });
  EXPECT_EQ(distinct.size(), 1296u);
}

TEST(SteinerProperties, MonotoneUnderEdgeDeletion) {
  std::mt19937_64 rng(111);
  for (int i = 0; i < kCases; ++i) {
    const Graph g = sample(rng, 3, 10);
    const auto edges = g.edges();
    if (edges.empty()) continue;
    const Edge e = edges[rng() % edges.size()];
    const Graph h = g.without_edge(e.u, e.v);
    const VertexSet s(rng() & g.vertices().bits());
    EXPECT_LE(steiner_distance(g, s), steiner_distance(h, s)) << to_graph6(g) << " " << s.to_string();
  }
}

TEST(SteinerProperties, DiameterMonotoneInKAndBoundedByRadius) {
  std::mt19937_64 rng(112);
  for (int i = 0; i < 60; ++i) {
    std::uniform_int_distribution<int> order(3, 8);
    const Graph g = oracle::random_connected(order(rng), 0.45, rng);
    ExtLength prev = ExtLength::finite(0);
    for (int k = 2; k <= g.order(); ++k) {
      const SteinerReport r = steiner_report(g, k);
      EXPECT_LE(prev, r.sdiam);
      EXPECT_LE(r.srad, r.sdiam);
      EXPECT_GE(r.sdiam, ExtLength::finite(k - 1));
      EXPECT_LE(r.sdiam, ExtLength::finite(g.order() - 1));
      EXPECT_EQ(r.sdiam, *std::max_element(r.per_vertex_ecc.begin(), r.per_vertex_ecc.end()));
      EXPECT_EQ(r.srad, *std::min_element(r.per_vertex_ecc.begin(), r.per_vertex_ecc.end()));
      EXPECT_EQ(r.sdiam, steiner_diameter(g, k));
      ASSERT_TRUE(r.witness);
      EXPECT_EQ(r.witness->size(), r.sdiam.value());
      EXPECT_TRUE(r.witness_terminals.subset_of(r.witness->vertices));
      EXPECT_EQ(r.witness_terminals.size(), k);
      EXPECT_EQ(steiner_distance(g, r.witness_terminals), r.sdiam);
      prev = r.sdiam;
    }
  }
}

TEST(SteinerProperties, MedianFormulaMatchesDp) {
  std::mt19937_64 rng(113);
  for (int i = 0; i < kCases; ++i) {
    const Graph g = sample(rng, 3, 12);
    std::uniform_int_distribution<int> vertex(0, g.order() - 1);
    const int a = vertex(rng), b = vertex(rng), c = vertex(rng);
    VertexSet s{a};
    s.insert(b);
    s.insert(c);
    EXPECT_EQ(steiner_distance_3(g, a, b, c), steiner_distance(g, s)) << to_graph6(g);
  }
}

TEST(SteinerProperties, TreeAdditionIdentity) {
  std::mt19937_64 rng(114);
  for (int i = 0; i < kCases; ++i) {
    const Graph t = oracle::random_tree(3 + i % 10, rng);
    const auto a = oracle::matrix(t);
    const VertexSet s(rng() & t.vertices().bits());
    if (s.empty() || s == t.vertices()) continue;
    const auto tree = steiner_tree(t, s);
    ASSERT_TRUE(tree);
    for (int x : t.vertices() - s) {
      int near = t.order();
      const auto d = oracle::bfs(a, x);
      for (int u : tree->vertices) near = std::min(near, d[u]);
      EXPECT_EQ(oracle::steiner(a, (s | VertexSet::single(x)).bits()), oracle::steiner(a, s.bits()) + near);
      EXPECT_EQ(distance_to_subtree(t, x, *tree), ExtLength::finite(near));
    }
  }
}

TEST(RecognizerProperties, GeneratorRoundTrip) {
  std::mt19937_64 rng(121);
  std::uniform_int_distribution<int> leg(0, 5);
  for (int i = 0; i < kCases; ++i) {
    int p[3] = {leg(rng), leg(rng), leg(rng)};
    std::sort(p, p + 3);
    const Graph ts = generate(TriangleSpiderSpec{p[0], p[1], p[2]});
    EXPECT_EQ(recognize_triangle_spider(ts), (TriangleSpiderParams{p[0], p[1], p[2]}));
    EXPECT_EQ(steiner_diameter(ts, 3), ExtLength::finite(ts.order() - 1));
    if (p[0] >= 1) {
      const Graph sp = generate(SpiderSpec{p[0], p[1], p[2]});
      EXPECT_EQ(recognize_spider(sp), (SpiderParams{p[0], p[1], p[2]}));
      EXPECT_EQ(steiner_diameter(sp, 3), ExtLength::finite(sp.order() - 1));
    }
  }
}

TEST(RecognizerProperties, DoubleStarIsDominatingEdge) {
  std::mt19937_64 rng(122);
  for (int i = 0; i < kCases; ++i) {
    const Graph g = sample(rng, 2, 10);
    const auto a = oracle::matrix(g);
    bool expect = false;
    for (Edge e : g.edges()) {
      bool all = true;
      for (int x = 0; x < g.order(); ++x) all = all && (x == e.u || x == e.v || a[x][e.u] || a[x][e.v]);
      expect = expect || all;
    }
    EXPECT_EQ(has_spanning_double_star(g), expect) << to_graph6(g);
  }
}

TEST(RecognizerProperties, Sdiam2Prediction) {
  std::mt19937_64 rng(123);
  for (int i = 0; i < kCases; ++i) {
    const Graph g = oracle::random_connected(2 + i % 10, 0.5, rng);
    const Sdiam2Prediction p = classify_sdiam2(g);
    const ExtLength d = steiner_diameter(g, 2);
    if (p.value()) EXPECT_EQ(d, ExtLength::finite(*p.value())) << to_graph6(g);
    EXPECT_EQ(d == 1, p.complete);
    EXPECT_EQ(d == 2, p.bloom) << to_graph6(g);
    if (p.path) EXPECT_EQ(d, ExtLength::finite(g.order() - 1));
  }
}

TEST(NordhausGaddumProperties, RandomPairs) {
  std::mt19937_64 rng(131);
  int checked = 0;
  while (checked < 120) {
    const Graph g = sample(rng, 5, 9);
    if (!is_connected(g) || !is_connected(g.complement())) continue;
    ++checked;
    const int n = g.order();
    EXPECT_EQ(check_obs3_k_equals_n(g).status, VerdictStatus::Holds);
    EXPECT_TRUE(check_lem0(g).holds()) << to_graph6(g);
    EXPECT_TRUE(check_lemM(g).holds()) << to_graph6(g);
    EXPECT_TRUE(check_proA(g).holds()) << to_graph6(g);
    EXPECT_TRUE(check_proB(g).holds()) << to_graph6(g);
    for (int k = 3; k <= n; ++k) EXPECT_TRUE(check_th5(g, k).holds()) << to_graph6(g) << " k=" << k;
  }
}

TEST(NordhausGaddumProperties, InfinitySideIsVacuousNotViolated) {
  std::mt19937_64 rng(132);
  for (int i = 0; i < kCases; ++i) {
    const Graph g = sample(rng, 5, 9);
    if (is_connected(g) && is_connected(g.complement())) continue;
    const PairMetrics m = pair_metrics(g, 3);
    EXPECT_TRUE(m.sum.is_infinite());
    EXPECT_TRUE(m.product.is_infinite());
    EXPECT_EQ(check_th5(g, 3).status, VerdictStatus::Vacuous);
    EXPECT_EQ(check_proC(g).status, VerdictStatus::Vacuous);
  }
}
