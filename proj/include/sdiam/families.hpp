#pragma once

// Named graph families. Vertex labels are fixed so that outputs are
// reproducible:
//   Path/Cycle        0..n-1 in order
//   CompleteBipartite parts {0..s-1} and {s..s+t-1}
//   Star              centre 0, leaves 1..L
//   DoubleStar        centres 0-1, leaves of 0 first, then leaves of 1
//   Spider(a,b,c)     centre 0, then leg a, leg b, leg c (each from the centre out)
//   TriangleSpider    triangle 0,1,2; legs p, q, r hang from 0, 1, 2
//   TripleStar        triangle 0,1,2; a leaves on 0, then b on 1, then c on 2
//   H2                path u=0, v=1, w=2, then one vertex per pattern
//   StarPath(n)       star centre 0 with leaves 1..n-3, then path 0-(n-2)-(n-1)
//   Example2(G')      G' on 0..m-1, then a=m, b=m+1, c=m+2, d=m+3

#include <string>
#include <variant>
#include <vector>

#include "sdiam/errors.hpp"
#include "sdiam/graph.hpp"

namespace sdiam {

struct PathSpec { int n; };
struct CycleSpec { int n; };
struct CompleteSpec { int n; };
struct CompleteBipartiteSpec { int s; int t; };
struct StarSpec { int leaves; };
struct DoubleStarSpec { int s; int t; };
struct SpiderSpec { int a; int b; int c; };
struct TriangleSpiderSpec { int p; int q; int r; };
struct TripleStarSpec { int a; int b; int c; };

// Adjacency of one extra H2 vertex to the base path u-v-w.
enum class H2Pattern { UVW, UV, VW, UW, V };

struct H2Spec { std::vector<H2Pattern> patterns; };
struct StarPathSpec { int n; };
struct Example2Spec { Graph inner; };

using FamilySpec =
    std::variant<PathSpec, CycleSpec, CompleteSpec, CompleteBipartiteSpec, StarSpec,
                 DoubleStarSpec, SpiderSpec, TriangleSpiderSpec, TripleStarSpec, H2Spec,
                 StarPathSpec, Example2Spec>;

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw parameter_error(what);
}

inline void require_order(int n) {
  require(n >= 1 && n <= Graph::max_order, "order must be in [1, 64], got " + std::to_string(n));
}

// Appends a path of `len` new vertices hanging from `anchor`.
inline void hang_path(std::vector<Edge>& edges, int anchor, int len, int& next) {
  int prev = anchor;
  for (int i = 0; i < len; ++i) {
    edges.emplace_back(prev, next);
    prev = next++;
  }
}

inline Graph build(const PathSpec& s) {
  require_order(s.n);
  std::vector<Edge> e;
  for (int i = 0; i + 1 < s.n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(s.n, e);
}

inline Graph build(const CycleSpec& s) {
  require(s.n >= 3, "cycle needs n >= 3");
  require_order(s.n);
  std::vector<Edge> e;
  for (int i = 0; i < s.n; ++i) e.emplace_back(i, (i + 1) % s.n);
  return Graph::from_edges(s.n, e);
}

inline Graph build(const CompleteSpec& s) {
  require_order(s.n);
  std::vector<Edge> e;
  for (int i = 0; i < s.n; ++i)
    for (int j = i + 1; j < s.n; ++j) e.emplace_back(i, j);
  return Graph::from_edges(s.n, e);
}

inline Graph build(const CompleteBipartiteSpec& s) {
  require(s.s >= 1 && s.t >= 1, "complete bipartite parts must be non-empty");
  require_order(s.s + s.t);
  std::vector<Edge> e;
  for (int i = 0; i < s.s; ++i)
    for (int j = 0; j < s.t; ++j) e.emplace_back(i, s.s + j);
  return Graph::from_edges(s.s + s.t, e);
}

inline Graph build(const StarSpec& s) {
  require(s.leaves >= 1, "star needs at least one leaf");
  require_order(s.leaves + 1);
  std::vector<Edge> e;
  for (int i = 1; i <= s.leaves; ++i) e.emplace_back(0, i);
  return Graph::from_edges(s.leaves + 1, e);
}

inline Graph build(const DoubleStarSpec& s) {
  require(s.s >= 0 && s.t >= 0, "double star leaf counts must be >= 0");
  const int n = s.s + s.t + 2;
  require_order(n);
  std::vector<Edge> e{{0, 1}};
  int next = 2;
  for (int i = 0; i < s.s; ++i) e.emplace_back(0, next++);
  for (int i = 0; i < s.t; ++i) e.emplace_back(1, next++);
  return Graph::from_edges(n, e);
}

inline Graph build(const SpiderSpec& s) {
  require(0 <= s.a && s.a <= s.b && s.b <= s.c && s.b >= 1,
          "spider legs need 0 <= a <= b <= c and b >= 1");
  const int n = s.a + s.b + s.c + 1;
  require_order(n);
  std::vector<Edge> e;
  int next = 1;
  hang_path(e, 0, s.a, next);
  hang_path(e, 0, s.b, next);
  hang_path(e, 0, s.c, next);
  return Graph::from_edges(n, e);
}

inline Graph build(const TriangleSpiderSpec& s) {
  require(0 <= s.p && s.p <= s.q && s.q <= s.r, "triangle spider legs need 0 <= p <= q <= r");
  const int n = s.p + s.q + s.r + 3;
  require_order(n);
  std::vector<Edge> e{{0, 1}, {1, 2}, {0, 2}};
  int next = 3;
  hang_path(e, 0, s.p, next);
  hang_path(e, 1, s.q, next);
  hang_path(e, 2, s.r, next);
  return Graph::from_edges(n, e);
}

inline Graph build(const TripleStarSpec& s) {
  require(0 <= s.a && s.a <= s.b && s.b <= s.c && s.c >= 1,
          "triple star needs 0 <= a <= b <= c and c >= 1");
  const int n = s.a + s.b + s.c + 3;
  require_order(n);
  std::vector<Edge> e{{0, 1}, {1, 2}, {0, 2}};
  int next = 3;
  for (int i = 0; i < s.a; ++i) e.emplace_back(0, next++);
  for (int i = 0; i < s.b; ++i) e.emplace_back(1, next++);
  for (int i = 0; i < s.c; ++i) e.emplace_back(2, next++);
  return Graph::from_edges(n, e);
}

inline Graph build(const H2Spec& s) {
  const int n = 3 + static_cast<int>(s.patterns.size());
  require_order(n);
  constexpr int u = 0, v = 1, w = 2;
  std::vector<Edge> e{{u, v}, {v, w}};
  int x = 3;
  for (H2Pattern p : s.patterns) {
    switch (p) {
      case H2Pattern::UVW: e.insert(e.end(), {{x, u}, {x, v}, {x, w}}); break;
      case H2Pattern::UV: e.insert(e.end(), {{x, u}, {x, v}}); break;
      case H2Pattern::VW: e.insert(e.end(), {{x, v}, {x, w}}); break;
      case H2Pattern::UW: e.insert(e.end(), {{x, u}, {x, w}}); break;
      case H2Pattern::V: e.emplace_back(x, v); break;
    }
    ++x;
  }
  return Graph::from_edges(n, e);
}

inline Graph build(const StarPathSpec& s) {
  require(s.n >= 4, "star-path needs n >= 4");
  require_order(s.n);
  std::vector<Edge> e;
  for (int i = 1; i <= s.n - 3; ++i) e.emplace_back(0, i);
  e.emplace_back(0, s.n - 2);
  e.emplace_back(s.n - 2, s.n - 1);
  return Graph::from_edges(s.n, e);
}

inline Graph build(const Example2Spec& s) {
  const int m = s.inner.order();
  const int n = m + 4;
  require_order(n);
  std::vector<Edge> e = s.inner.edges();
  const int a = m, b = m + 1, c = m + 2, d = m + 3;
  e.insert(e.end(), {{a, b}, {b, c}, {c, d}});
  for (int x = 0; x < m; ++x) {
    e.emplace_back(a, x);
    e.emplace_back(d, x);
  }
  return Graph::from_edges(n, e);
}

}  // namespace detail

inline Graph generate(const FamilySpec& spec) {
  return std::visit([](const auto& s) { return detail::build(s); }, spec);
}

inline Graph path_graph(int n) { return generate(PathSpec{n}); }
inline Graph cycle_graph(int n) { return generate(CycleSpec{n}); }
inline Graph complete_graph(int n) { return generate(CompleteSpec{n}); }

inline std::string to_string(H2Pattern p) {
  switch (p) {
    case H2Pattern::UVW: return "UVW";
    case H2Pattern::UV: return "UV";
    case H2Pattern::VW: return "VW";
    case H2Pattern::UW: return "UW";
    case H2Pattern::V: return "V";
  }
  return "?";
}

inline H2Pattern parse_h2_pattern(const std::string& s) {
  if (s == "UVW") return H2Pattern::UVW;
  if (s == "UV") return H2Pattern::UV;
  if (s == "VW") return H2Pattern::VW;
  if (s == "UW") return H2Pattern::UW;
  if (s == "V") return H2Pattern::V;
  throw parameter_error("unknown H2 pattern '" + s + "'");
}

}  // namespace sdiam
