#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "sdiam/errors.hpp"
#include "sdiam/vertex_set.hpp"

namespace sdiam {

// Undirected edge, normalized so that u < v.
struct Edge {
  int u = 0;
  int v = 0;

  constexpr Edge() = default;
  constexpr Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend constexpr bool operator==(Edge, Edge) = default;
  friend constexpr auto operator<=>(Edge, Edge) = default;
};

// Immutable simple undirected graph on vertices 0..n-1 (1 <= n <= 64).
// Adjacency is held as one bitmask row per vertex.
class Graph {
 public:
  static constexpr int max_order = 64;

  // Edgeless graph on n vertices.
  explicit Graph(int n) : n_(n) {
    if (n < 1 || n > max_order) {
      throw domain_error("graph order must be in [1, 64], got " + std::to_string(n));
    }
  }

  static Graph from_edges(int n, std::span<const Edge> edges) {
    Graph g(n);
    for (Edge e : edges) g.add_edge_unchecked(e.u, e.v, /*validate=*/true);
    return g;
  }
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  // Builds from adjacency rows; rejects loops and asymmetric rows.
  static Graph from_rows(int n, std::span<const std::uint64_t> rows) {
    Graph g(n);
    if (static_cast<int>(rows.size()) != n) throw domain_error("row count does not match order");
    const std::uint64_t all = VertexSet::first(n).bits();
    for (int v = 0; v < n; ++v) {
      if (rows[v] & ~all) throw domain_error("adjacency row references a vertex >= n");
      if ((rows[v] >> v) & 1U) throw domain_error("loop at vertex " + std::to_string(v));
      g.rows_[v] = rows[v];
    }
    for (int u = 0; u < n; ++u) {
      for (int v : VertexSet(g.rows_[u])) {
        if (!((g.rows_[v] >> u) & 1U)) throw domain_error("adjacency is not symmetric");
      }
    }
    return g;
  }

  int order() const noexcept { return n_; }
  int size() const noexcept {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += std::popcount(rows_[v]);
    return twice / 2;
  }

  VertexSet vertices() const noexcept { return VertexSet::first(n_); }
  bool adjacent(int u, int v) const noexcept { return (rows_[u] >> v) & 1U; }
  VertexSet neighbors(int v) const noexcept { return VertexSet(rows_[v]); }
  std::uint64_t row(int v) const noexcept { return rows_[v]; }
  int degree(int v) const noexcept { return std::popcount(rows_[v]); }

  // Union of the neighbourhoods of `s`.
  VertexSet neighbors(VertexSet s) const noexcept {
    std::uint64_t out = 0;
    for (int v : s) out |= rows_[v];
    return VertexSet(out);
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u) {
      for (int v : VertexSet(rows_[u] & ~((std::uint64_t{2} << u) - 1))) out.emplace_back(u, v);
    }
    return out;
  }

  Graph complement() const {
    Graph h(n_);
    const std::uint64_t all = VertexSet::first(n_).bits();
    for (int v = 0; v < n_; ++v) h.rows_[v] = ~rows_[v] & all & ~(std::uint64_t{1} << v);
    return h;
  }

  Graph with_edge(int u, int v) const {
    Graph h = *this;
    h.add_edge_unchecked(u, v, /*validate=*/true);
    return h;
  }
  Graph without_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    Graph h = *this;
    h.rows_[u] &= ~(std::uint64_t{1} << v);
    h.rows_[v] &= ~(std::uint64_t{1} << u);
    return h;
  }

  // Subgraph induced by `keep`, relabelled to 0..|keep|-1 in increasing order.
  Graph induced(VertexSet keep) const {
    if (!keep.fits(n_) || keep.empty()) throw domain_error("induced: bad vertex set");
    const std::vector<int> old = keep.to_vector();
    Graph h(static_cast<int>(old.size()));
    for (std::size_t i = 0; i < old.size(); ++i) {
      for (std::size_t j = i + 1; j < old.size(); ++j) {
        if (adjacent(old[i], old[j])) h.add_edge_unchecked(static_cast<int>(i), static_cast<int>(j), false);
      }
    }
    return h;
  }

  friend bool operator==(const Graph& a, const Graph& b) noexcept {
    if (a.n_ != b.n_) return false;
    return std::equal(a.rows_.begin(), a.rows_.begin() + a.n_, b.rows_.begin());
  }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw domain_error("vertex " + std::to_string(v) + " out of range");
  }
  void add_edge_unchecked(int u, int v, bool validate) {
    if (validate) {
      check_vertex(u);
      check_vertex(v);
      if (u == v) throw domain_error("loop at vertex " + std::to_string(u));
    }
    rows_[u] |= std::uint64_t{1} << v;
    rows_[v] |= std::uint64_t{1} << u;
  }

  int n_;
  std::array<std::uint64_t, max_order> rows_{};
};

inline int min_degree(const Graph& g) noexcept {
  int d = g.order();
  for (int v = 0; v < g.order(); ++v) d = std::min(d, g.degree(v));
  return d;
}

inline int max_degree(const Graph& g) noexcept {
  int d = 0;
  for (int v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
  return d;
}

inline std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) d[v] = g.degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

inline Graph complement(const Graph& g) { return g.complement(); }

}  // namespace sdiam
