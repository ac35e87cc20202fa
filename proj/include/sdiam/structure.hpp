#pragma once

// Classical structural primitives: reachability, distances, cut vertices,
// connectivity (vertex and edge, via unit-capacity max flow), circumference.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <limits>
#include <vector>

#include "sdiam/errors.hpp"
#include "sdiam/ext_length.hpp"
#include "sdiam/graph.hpp"

namespace sdiam {

// Vertices reachable from `start` using only vertices of `within`.
inline VertexSet reach_within(const Graph& g, int start, VertexSet within) {
  std::uint64_t seen = std::uint64_t{1} << start;
  std::uint64_t frontier = seen;
  const std::uint64_t allowed = within.bits();
  while (frontier) {
    std::uint64_t next = 0;
    for (int v : VertexSet(frontier)) next |= g.row(v);
    next &= allowed & ~seen;
    seen |= next;
    frontier = next;
  }
  return VertexSet(seen);
}

inline VertexSet component_of(const Graph& g, int v) {
  return reach_within(g, v, g.vertices());
}

// True iff the subgraph induced by `s` is connected. The empty set counts as
// connected.
inline bool is_connected_within(const Graph& g, VertexSet s) {
  if (s.empty()) return true;
  return reach_within(g, s.min(), s) == s;
}

inline bool is_connected(const Graph& g) { return is_connected_within(g, g.vertices()); }

// Components in order of their smallest vertex.
inline std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet left = g.vertices();
  while (!left.empty()) {
    VertexSet c = reach_within(g, left.min(), g.vertices());
    out.push_back(c);
    left = left - c;
  }
  return out;
}

inline bool is_tree(const Graph& g) { return g.size() == g.order() - 1 && is_connected(g); }

inline int leaf_count(const Graph& g) {
  int leaves = 0;
  for (int v = 0; v < g.order(); ++v) leaves += g.degree(v) == 1 ? 1 : 0;
  return leaves;
}

// All-pairs shortest-path lengths by breadth-first layering.
class DistanceMatrix {
 public:
  static constexpr int unreachable = std::numeric_limits<int>::max() / 4;

  explicit DistanceMatrix(const Graph& g)
      : n_(g.order()), d_(static_cast<std::size_t>(n_ * n_), unreachable) {
    for (int s = 0; s < n_; ++s) {
      int* row = &d_[static_cast<std::size_t>(s * n_)];
      std::uint64_t seen = std::uint64_t{1} << s;
      std::uint64_t frontier = seen;
      row[s] = 0;
      for (int layer = 1; frontier; ++layer) {
        std::uint64_t next = 0;
        for (int v : VertexSet(frontier)) next |= g.row(v);
        next &= ~seen;
        for (int v : VertexSet(next)) row[v] = layer;
        seen |= next;
        frontier = next;
      }
    }
  }

  int order() const noexcept { return n_; }
  // Raw distance, `unreachable` across components.
  int raw(int u, int v) const noexcept { return d_[static_cast<std::size_t>(u * n_ + v)]; }
  const int* row(int u) const noexcept { return &d_[static_cast<std::size_t>(u * n_)]; }
  ExtLength at(int u, int v) const {
    const int d = raw(u, v);
    return d == unreachable ? ExtLength::infinite() : ExtLength::finite(d);
  }

 private:
  int n_;
  std::vector<int> d_;
};

inline DistanceMatrix pairwise_distances(const Graph& g) { return DistanceMatrix(g); }

// Articulation points (Hopcroft-Tarjan lowpoint). Requires a connected graph.
inline VertexSet cut_vertices(const Graph& g) {
  if (!is_connected(g)) throw domain_error("cut_vertices requires a connected graph");
  const int n = g.order();
  std::array<int, Graph::max_order> disc{};
  std::array<int, Graph::max_order> low{};
  std::array<int, Graph::max_order> parent{};
  std::array<std::uint64_t, Graph::max_order> pending{};
  disc.fill(-1);
  VertexSet cuts;
  int time = 0;

  // Iterative DFS from vertex 0.
  std::vector<int> stack{0};
  disc[0] = low[0] = time++;
  parent[0] = -1;
  pending[0] = g.row(0);
  int root_children = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    if (pending[v]) {
      const int w = std::countr_zero(pending[v]);
      pending[v] &= pending[v] - 1;
      if (disc[w] < 0) {
        parent[w] = v;
        disc[w] = low[w] = time++;
        pending[w] = g.row(w);
        if (v == 0) ++root_children;
        stack.push_back(w);
      } else if (w != parent[v]) {
        low[v] = std::min(low[v], disc[w]);
      }
      continue;
    }
    stack.pop_back();
    const int p = parent[v];
    if (p >= 0) {
      low[p] = std::min(low[p], low[v]);
      if (p != 0 && low[v] >= disc[p]) cuts.insert(p);
    }
  }
  if (n > 1 && root_children > 1) cuts.insert(0);
  return cuts;
}

// Connected, at least 3 vertices and no cut vertex.
inline bool is_2_connected(const Graph& g) {
  return g.order() >= 3 && is_connected(g) && cut_vertices(g).empty();
}

namespace detail {

// Unit-capacity max flow on a dense residual matrix, capped at `limit`.
class UnitFlow {
 public:
  explicit UnitFlow(int nodes) : n_(nodes), cap_(static_cast<std::size_t>(nodes * nodes), 0) {}

  void add_arc(int a, int b) { ++cap_[idx(a, b)]; }

  int max_flow(int s, int t, int limit) {
    int flow = 0;
    std::vector<int> prev(static_cast<std::size_t>(n_));
    std::vector<int> queue(static_cast<std::size_t>(n_));
    while (flow < limit) {
      std::fill(prev.begin(), prev.end(), -1);
      prev[s] = s;
      int head = 0;
      int tail = 0;
      queue[tail++] = s;
      while (head < tail && prev[t] < 0) {
        const int a = queue[head++];
        for (int b = 0; b < n_; ++b) {
          if (prev[b] < 0 && cap_[idx(a, b)] > 0) {
            prev[b] = a;
            queue[tail++] = b;
          }
        }
      }
      if (prev[t] < 0) break;
      for (int b = t; b != s; b = prev[b]) {
        --cap_[idx(prev[b], b)];
        ++cap_[idx(b, prev[b])];
      }
      ++flow;
    }
    return flow;
  }

 private:
  std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a * n_ + b); }
  int n_;
  std::vector<int> cap_;
};

// Maximum number of internally vertex-disjoint s-t paths (s, t non-adjacent).
inline int local_vertex_connectivity(const Graph& g, int s, int t, int limit) {
  const int n = g.order();
  // v_in = v, v_out = v + n; s and t are not split.
  UnitFlow f(2 * n);
  for (int v = 0; v < n; ++v) {
    if (v != s && v != t) f.add_arc(v, v + n);
  }
  auto out = [&](int v) { return (v == s || v == t) ? v : v + n; };
  for (Edge e : g.edges()) {
    f.add_arc(out(e.u), e.v);
    f.add_arc(out(e.v), e.u);
  }
  return f.max_flow(s, t, limit);
}

inline int local_edge_connectivity(const Graph& g, int s, int t, int limit) {
  UnitFlow f(g.order());
  for (Edge e : g.edges()) {
    f.add_arc(e.u, e.v);
    f.add_arc(e.v, e.u);
  }
  return f.max_flow(s, t, limit);
}

}  // namespace detail

// kappa(G): fewest vertices whose removal disconnects G; n-1 for K_n.
inline int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (!is_connected(g)) return 0;
  int best = n - 1;
  for (int s = 0; s < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      if (g.adjacent(s, t)) continue;
      best = std::min(best, detail::local_vertex_connectivity(g, s, t, best));
    }
  }
  return best;
}

// lambda(G): fewest edges whose removal disconnects G; 0 for n = 1.
inline int edge_connectivity(const Graph& g) {
  const int n = g.order();
  if (n == 1 || !is_connected(g)) return 0;
  int best = min_degree(g);
  for (int t = 1; t < n; ++t) best = std::min(best, detail::local_edge_connectivity(g, 0, t, best));
  return best;
}

inline constexpr int circumference_max_order = 24;

// Length of a longest cycle, 0 for acyclic graphs. Subset DP over simple
// paths that start at their smallest vertex.
inline int circumference(const Graph& g) {
  const int n = g.order();
  if (n > circumference_max_order) {
    throw capacity_error("circumference supports n <= 24, got " + std::to_string(n));
  }
  if (n < 3) return 0;
  // ends[mask] = set of end vertices v such that some path starting at
  // min(mask) visits exactly mask and ends at v.
  std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);
  int best = 0;
  for (int s = 0; s < n; ++s) ends[std::size_t{1} << s] = 1U << s;
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    const std::uint32_t e = ends[mask];
    if (!e) continue;
    const int s = std::countr_zero(mask);
    const int len = std::popcount(mask);
    if (len >= 3 && (e & static_cast<std::uint32_t>(g.row(s)))) best = std::max(best, len);
    // Extend only with vertices above the start.
    const std::uint32_t higher = ~((2U << s) - 1) & ((1U << n) - 1) & ~mask;
    for (int v : VertexSet(e)) {
      for (int w : VertexSet(g.row(v) & higher)) ends[mask | (1U << w)] |= 1U << w;
    }
  }
  return best;
}

}  // namespace sdiam
