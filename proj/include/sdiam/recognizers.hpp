#pragma once

// Structural characterizations of small Steiner diameters. None of these
// call into the Steiner engine; agreement with computed values is checked in
// the test and verification suites only.

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sdiam/errors.hpp"
#include "sdiam/ext_length.hpp"
#include "sdiam/graph.hpp"
#include "sdiam/structure.hpp"

namespace sdiam {

struct SpiderParams {
  int a = 0, b = 0, c = 0;
  friend bool operator==(const SpiderParams&, const SpiderParams&) = default;
};

struct TriangleSpiderParams {
  int p = 0, q = 0, r = 0;
  friend bool operator==(const TriangleSpiderParams&, const TriangleSpiderParams&) = default;
};

// An edge uv with every other vertex adjacent to u or v; equivalent to a
// spanning double star.
inline bool has_spanning_double_star(const Graph& g) {
  const VertexSet all = g.vertices();
  for (Edge e : g.edges()) {
    const VertexSet covered = g.neighbors(e.u) | g.neighbors(e.v);
    if ((all - covered).empty()) return true;
  }
  return false;
}

inline bool is_complete(const Graph& g) {
  return min_degree(g) == g.order() - 1;
}

// Connected, acyclic, max degree <= 2.
inline bool is_path(const Graph& g) { return is_tree(g) && max_degree(g) <= 2; }

inline bool is_cycle(const Graph& g) {
  return g.order() >= 3 && is_connected(g) && min_degree(g) == 2 && max_degree(g) == 2;
}

// Predicted sdiam_2 values. Each field is set only when the corresponding
// characterization fires.
struct Sdiam2Prediction {
  bool complete = false;       // sdiam_2 = 1
  bool bloom = false;          // sdiam_2 = 2
  bool path = false;           // sdiam_2 = n - 1
  std::optional<int> value() const noexcept {
    if (complete) return 1;
    if (bloom) return 2;
    return std::nullopt;
  }
};

inline Sdiam2Prediction classify_sdiam2(const Graph& g) {
  if (!is_connected(g)) throw domain_error("classify_sdiam2 requires a connected graph");
  Sdiam2Prediction p;
  p.complete = is_complete(g);
  const Graph gc = g.complement();
  p.bloom = gc.size() > 0 && !has_spanning_double_star(gc);
  p.path = is_path(g);
  return p;
}

inline bool sdiam3_is_2(const Graph& g) {
  if (g.order() < 3 || !is_connected(g)) throw domain_error("sdiam3_is_2 requires a connected graph with n >= 3");
  return min_degree(g) >= g.order() - 2;
}

// A triangle of the complement dominating every other vertex (in the
// complement); equivalent to the complement containing a spanning triple star.
inline bool complement_has_spanning_triple_star(const Graph& g) {
  const int n = g.order();
  if (n < 4) throw domain_error("complement_has_spanning_triple_star requires n >= 4");
  const Graph h = g.complement();
  const VertexSet all = h.vertices();
  for (int u = 0; u < n; ++u) {
    for (int v : h.neighbors(u)) {
      if (v <= u) continue;
      for (int w : h.neighbors(u) & h.neighbors(v)) {
        if (w <= v) continue;
        const VertexSet covered = h.neighbors(u) | h.neighbors(v) | h.neighbors(w);
        if ((all - covered).empty()) return true;
      }
    }
  }
  return false;
}

// A path u-v-w of the complement such that every other vertex x is adjacent
// (in the complement) to v, or to both u and w. This is the union of the five
// allowed attachment patterns of H2.
inline bool complement_has_spanning_H2(const Graph& g) {
  const int n = g.order();
  if (n < 4) throw domain_error("complement_has_spanning_H2 requires n >= 4");
  const Graph h = g.complement();
  for (int v = 0; v < n; ++v) {
    const VertexSet nv = h.neighbors(v);
    for (int u : nv) {
      for (int w : nv) {
        if (w <= u) continue;  // u-v-w and w-v-u are the same condition
        const VertexSet rest = h.vertices() - VertexSet{u, v, w};
        const VertexSet ok = nv | (h.neighbors(u) & h.neighbors(w));
        if ((rest - ok).empty()) return true;
      }
    }
  }
  return false;
}

inline bool sdiam3_is_3(const Graph& g) {
  if (g.order() < 4 || !is_connected(g)) throw domain_error("sdiam3_is_3 requires a connected graph with n >= 4");
  const Graph gc = g.complement();
  return max_degree(gc) >= 2 && !complement_has_spanning_triple_star(g) &&
         !complement_has_spanning_H2(g);
}

namespace detail {

// Length of the pendant path starting at `first`, walking away from `from`.
// Returns -1 if the walk meets a vertex of degree other than 1 or 2.
inline int leg_length(const Graph& g, int from, int first) {
  int len = 0;
  int prev = from;
  int cur = first;
  while (true) {
    ++len;
    const int d = g.degree(cur);
    if (d == 1) return len;
    if (d != 2) return -1;
    const VertexSet next = g.neighbors(cur) - VertexSet::single(prev);
    prev = cur;
    cur = next.min();
  }
}

}  // namespace detail

// T_{a,b,c}: a tree with all degrees <= 2 (a path, reported as (0, b, c) with
// b = floor((n-1)/2)) or exactly one vertex of degree 3 and the rest <= 2.
inline std::optional<SpiderParams> recognize_spider(const Graph& g) {
  const int n = g.order();
  if (n < 2 || !is_tree(g)) return std::nullopt;
  std::vector<int> deg3;
  for (int v = 0; v < n; ++v) {
    const int d = g.degree(v);
    if (d > 3) return std::nullopt;
    if (d == 3) deg3.push_back(v);
  }
  if (deg3.empty()) {
    const int b = (n - 1) / 2;
    return SpiderParams{0, b, n - 1 - b};
  }
  if (deg3.size() != 1) return std::nullopt;
  const int centre = deg3.front();
  std::array<int, 3> legs{};
  int i = 0;
  for (int w : g.neighbors(centre)) legs[i++] = detail::leg_length(g, centre, w);
  std::sort(legs.begin(), legs.end());
  return SpiderParams{legs[0], legs[1], legs[2]};
}

// Triangle with three (possibly empty) pendant paths on distinct corners.
inline std::optional<TriangleSpiderParams> recognize_triangle_spider(const Graph& g) {
  const int n = g.order();
  if (n < 3 || g.size() != n || !is_connected(g)) return std::nullopt;
  // Unicyclic: find the triangle, then require that it is the only cycle.
  std::optional<std::array<int, 3>> tri;
  for (int u = 0; u < n && !tri; ++u) {
    for (int v : g.neighbors(u)) {
      if (v <= u) continue;
      const VertexSet common = g.neighbors(u) & g.neighbors(v);
      if (!common.empty()) {
        tri = std::array<int, 3>{u, v, common.min()};
        break;
      }
    }
  }
  if (!tri) return std::nullopt;
  const VertexSet corners{(*tri)[0], (*tri)[1], (*tri)[2]};
  std::array<int, 3> legs{};
  for (int i = 0; i < 3; ++i) {
    const int c = (*tri)[i];
    const VertexSet out = g.neighbors(c) - corners;
    if (out.size() > 1) return std::nullopt;
    if (out.empty()) {
      legs[i] = 0;
      continue;
    }
    legs[i] = detail::leg_length(g, c, out.min());
    if (legs[i] < 0) return std::nullopt;
  }
  // With n edges and one triangle, the legs must account for every vertex.
  if (legs[0] + legs[1] + legs[2] != n - 3) return std::nullopt;
  std::sort(legs.begin(), legs.end());
  return TriangleSpiderParams{legs[0], legs[1], legs[2]};
}

inline bool sdiam3_is_n_minus_1(const Graph& g) {
  if (g.order() < 3 || !is_connected(g)) {
    throw domain_error("sdiam3_is_n_minus_1 requires a connected graph with n >= 3");
  }
  return recognize_spider(g).has_value() || recognize_triangle_spider(g).has_value();
}

inline bool tree_leaf_criterion(const Graph& t, int k) {
  if (!is_tree(t)) throw domain_error("tree_leaf_criterion requires a tree");
  if (k < 2 || k > t.order()) throw domain_error("k must be in [2, n]");
  return leaf_count(t) <= k;
}

// sdiam_k = k - 1 implies delta >= n - k + 1. Takes the computed sdiam_k.
inline bool lem1_necessary_condition(const Graph& g, int k, ExtLength sdiam_k) {
  if (!is_connected(g)) throw domain_error("lem1_necessary_condition requires a connected graph");
  return !(sdiam_k == k - 1) || min_degree(g) >= g.order() - k + 1;
}

// circumference >= 4 implies sdiam_3 <= n - 2. Takes the computed sdiam_3.
inline bool lem2_circumference_bound(const Graph& g, ExtLength sdiam_3) {
  if (!is_connected(g) || g.order() < 5) {
    throw domain_error("lem2_circumference_bound requires a connected graph with n >= 5");
  }
  return circumference(g) < 4 || ext_le(sdiam_3, g.order() - 2);
}

enum class Sdiam3Kind { Two, Three, NMinus1, Other };

struct Sdiam3Class {
  Sdiam3Kind kind = Sdiam3Kind::Other;
  // Every characterization that fired, in the order Two, Three, NMinus1.
  std::vector<Sdiam3Kind> matched;
  std::optional<SpiderParams> spider;
  std::optional<TriangleSpiderParams> triangle_spider;
};

inline std::string to_string(Sdiam3Kind k) {
  switch (k) {
    case Sdiam3Kind::Two: return "Two";
    case Sdiam3Kind::Three: return "Three";
    case Sdiam3Kind::NMinus1: return "NMinus1";
    case Sdiam3Kind::Other: return "Other";
  }
  return "?";
}

// Structural classification only; for Other the caller supplies the value.
inline Sdiam3Class classify_sdiam3(const Graph& g) {
  if (g.order() < 3 || !is_connected(g)) throw domain_error("classify_sdiam3 requires a connected graph with n >= 3");
  Sdiam3Class c;
  if (sdiam3_is_2(g)) c.matched.push_back(Sdiam3Kind::Two);
  if (g.order() >= 4 && sdiam3_is_3(g)) c.matched.push_back(Sdiam3Kind::Three);
  c.spider = recognize_spider(g);
  c.triangle_spider = recognize_triangle_spider(g);
  if (c.spider || c.triangle_spider) c.matched.push_back(Sdiam3Kind::NMinus1);
  if (!c.matched.empty()) c.kind = c.matched.front();
  return c;
}

}  // namespace sdiam
