#pragma once

// Exact Steiner distances on unit-weight graphs.
//
// SteinerSolver runs Dreyfus-Wagner over terminal subsets; the brute-force
// superset scan (steiner_distance_oracle) and the 3-terminal median formula
// are independent routes kept for cross-checking.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sdiam/errors.hpp"
#include "sdiam/ext_length.hpp"
#include "sdiam/graph.hpp"
#include "sdiam/structure.hpp"

namespace sdiam {

// A tree of a host graph, given by its vertex set and edge list. A tree with
// a single vertex has no edges.
struct SteinerTree {
  VertexSet vertices;
  std::vector<Edge> edges;  // sorted ascending

  int size() const noexcept { return static_cast<int>(edges.size()); }
};

class SteinerSolver {
 public:
  // Dreyfus-Wagner is exponential in the terminal count; sets this large are
  // only accepted when they span their whole component.
  static constexpr int max_terminals = 18;

  explicit SteinerSolver(const Graph& g)
      : g_(g), dist_(g), n_(g.order()), parent_(static_cast<std::size_t>(n_ * n_), -1) {
    for (int v = 0; v < n_; ++v) {
      if (comp_[v].empty()) {
        const VertexSet c = component_of(g_, v);
        for (int w : c) comp_[w] = c;
      }
    }
    for (int s = 0; s < n_; ++s) {
      const int* d = dist_.row(s);
      for (int v = 0; v < n_; ++v) {
        if (v == s || d[v] == DistanceMatrix::unreachable) continue;
        for (int w : g_.neighbors(v)) {
          if (d[w] == d[v] - 1) {
            parent_[static_cast<std::size_t>(s * n_ + v)] = w;
            break;
          }
        }
      }
    }
  }

  const Graph& graph() const noexcept { return g_; }
  const DistanceMatrix& distances() const noexcept { return dist_; }

  ExtLength distance(VertexSet s) {
    switch (classify(s)) {
      case Shape::trivial: return ExtLength::finite(0);
      case Shape::split: return ExtLength::infinite();
      case Shape::pair: {
        const int a = s.min();
        return ExtLength::finite(dist_.raw(a, (s - VertexSet::single(a)).min()));
      }
      case Shape::whole_component: return ExtLength::finite(s.size() - 1);
      case Shape::general: break;
    }
    std::array<int, max_terminals> t{};
    int m = 0;
    for (int v : s) t[m++] = v;
    return ExtLength::finite(dreyfus_wagner(std::span<const int>(t.data(), static_cast<std::size_t>(m)), false));
  }

  // A minimum tree containing s, or nullopt when s spans several components.
  std::optional<SteinerTree> tree(VertexSet s) {
    const Shape shape = classify(s);
    if (shape == Shape::split) return std::nullopt;
    SteinerTree out;
    if (shape == Shape::trivial) {
      out.vertices = s;
      return out;
    }
    const std::vector<int> t = s.to_vector();
    if (shape == Shape::whole_component) {
      spanning_tree(s, out.edges);
    } else {
      dreyfus_wagner(t, true);
      collect((1U << (t.size() - 1)) - 1, t.back(), t, out.edges);
    }
    std::sort(out.edges.begin(), out.edges.end());
    out.edges.erase(std::unique(out.edges.begin(), out.edges.end()), out.edges.end());
    out.vertices = s;
    for (Edge e : out.edges) {
      out.vertices.insert(e.u);
      out.vertices.insert(e.v);
    }
    return out;
  }

  // min over m of d(m,a) + d(m,b) + d(m,c); m may coincide with a terminal.
  ExtLength median_distance(int a, int b, int c) const {
    check(VertexSet{a, b, c});
    int best = DistanceMatrix::unreachable;
    for (int m = 0; m < n_; ++m) {
      const int* d = dist_.row(m);
      if (d[a] == DistanceMatrix::unreachable || d[b] == DistanceMatrix::unreachable ||
          d[c] == DistanceMatrix::unreachable) {
        continue;
      }
      best = std::min(best, d[a] + d[b] + d[c]);
    }
    return best == DistanceMatrix::unreachable ? ExtLength::infinite() : ExtLength::finite(best);
  }

  // Cheap bounds for a terminal set lying inside one component.
  // lower: max(|s|-1, largest pairwise distance).
  int lower_bound(VertexSet s) const {
    int lb = s.size() - 1;
    for (int a : s)
      for (int b : s) lb = std::max(lb, dist_.raw(a, b));
    return lb;
  }
  // upper: size of the smallest union of BFS-tree paths rooted at a terminal.
  int upper_bound(VertexSet s) const {
    int ub = n_;
    for (int root : s) {
      std::uint64_t used = std::uint64_t{1} << root;
      const int* par = &parent_[static_cast<std::size_t>(root * n_)];
      for (int v : s) {
        for (int w = v; !((used >> w) & 1U); w = par[w]) used |= std::uint64_t{1} << w;
      }
      ub = std::min(ub, std::popcount(used) - 1);
    }
    return ub;
  }

  void check(VertexSet s) const {
    if (!s.fits(n_)) throw domain_error("terminal set " + s.to_string() + " has a vertex >= n");
  }

 private:
  enum class Shape { trivial, split, pair, whole_component, general };

  Shape classify(VertexSet s) const {
    check(s);
    if (s.size() <= 1) return Shape::trivial;
    const VertexSet comp = comp_[s.min()];
    if (!s.subset_of(comp)) return Shape::split;
    if (s.size() == 2) return Shape::pair;
    if (s.size() > max_terminals) {
      if (s == comp) return Shape::whole_component;
      throw capacity_error("Dreyfus-Wagner supports at most " + std::to_string(max_terminals) +
                           " terminals, got " + std::to_string(s.size()));
    }
    return Shape::general;
  }

  std::size_t at(std::uint32_t x, int v) const {
    return static_cast<std::size_t>(x) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
  }

  // Terminals t[0..m-2] index the subset lattice; t[m-1] is the root.
  int dreyfus_wagner(std::span<const int> t, bool witness) {
    constexpr int inf = DistanceMatrix::unreachable;
    const int r = static_cast<int>(t.size()) - 1;
    const int q = t[r];
    const std::uint32_t full = (1U << r) - 1;
    std::array<int, Graph::max_order> vbuf{};
    int nv = 0;
    for (int v : comp_[q]) vbuf[nv++] = v;
    const std::span<const int> verts(vbuf.data(), static_cast<std::size_t>(nv));

    dp_.resize(at(full + 1, 0));
    merge_.resize(static_cast<std::size_t>(n_));
    if (witness) {
      from_.resize(dp_.size());
      split_.resize(dp_.size());
    }

    for (std::uint32_t x = 1; x <= full; ++x) {
      if (std::has_single_bit(x)) {
        const int* d = dist_.row(t[std::countr_zero(x)]);
        for (int v : verts) dp_[at(x, v)] = d[v];
        continue;
      }
      for (int v : verts) merge_[v] = inf;
      const std::uint32_t low = x & (~x + 1);
      const std::uint32_t rest = x ^ low;
      // Splits {Y, X\Y} with the anchor bit `low` in Y.
      for (std::uint32_t sub = (rest - 1) & rest;; sub = (sub - 1) & rest) {
        const std::uint32_t y = low | sub;
        const std::uint32_t z = x ^ y;
        for (int v : verts) {
          const int c = dp_[at(y, v)] + dp_[at(z, v)];
          if (c < merge_[v]) {
            merge_[v] = c;
            if (witness) split_[at(x, v)] = y;
          }
        }
        if (sub == 0) break;
      }
      auto extend = [&](int v) {
        const int* d = dist_.row(v);
        int best = inf;
        int arg = v;
        for (int u : verts) {
          const int c = merge_[u] + d[u];
          if (c < best) {
            best = c;
            arg = u;
          }
        }
        dp_[at(x, v)] = best;
        if (witness) from_[at(x, v)] = static_cast<std::uint8_t>(arg);
      };
      if (x == full) {
        extend(q);
      } else {
        for (int v : verts) extend(v);
      }
    }
    return dp_[at(full, q)];
  }

  void add_path(int s, int v, std::vector<Edge>& out) const {
    const int* par = &parent_[static_cast<std::size_t>(s * n_)];
    for (int w = v; w != s; w = par[w]) out.emplace_back(par[w], w);
  }

  void collect(std::uint32_t x, int v, std::span<const int> t, std::vector<Edge>& out) const {
    if (std::has_single_bit(x)) {
      add_path(t[std::countr_zero(x)], v, out);
      return;
    }
    const int u = from_[at(x, v)];
    add_path(u, v, out);
    const std::uint32_t y = split_[at(x, u)];
    collect(y, u, t, out);
    collect(x ^ y, u, t, out);
  }

  void spanning_tree(VertexSet comp, std::vector<Edge>& out) const {
    const int root = comp.min();
    for (int v : comp) {
      if (v != root) out.emplace_back(parent_[static_cast<std::size_t>(root * n_ + v)], v);
    }
  }

  Graph g_;
  DistanceMatrix dist_;
  int n_;
  std::array<VertexSet, Graph::max_order> comp_{};
  std::vector<int> parent_;  // parent_[s*n+v]: predecessor of v on a shortest s-v path
  std::vector<int> dp_;
  std::vector<int> merge_;
  std::vector<std::uint8_t> from_;
  std::vector<std::uint32_t> split_;
};

inline ExtLength steiner_distance(const Graph& g, VertexSet s) {
  return SteinerSolver(g).distance(s);
}

inline std::optional<SteinerTree> steiner_tree(const Graph& g, VertexSet s) {
  return SteinerSolver(g).tree(s);
}

inline ExtLength steiner_distance_3(const Graph& g, int a, int b, int c) {
  return SteinerSolver(g).median_distance(a, b, c);
}

inline constexpr int oracle_max_order = 16;

// min{|W| - 1 : s ⊆ W, G[W] connected}, by scanning every superset of s.
inline ExtLength steiner_distance_oracle(const Graph& g, VertexSet s) {
  const int n = g.order();
  if (n > oracle_max_order) {
    throw capacity_error("oracle supports n <= 16, got " + std::to_string(n));
  }
  if (!s.fits(n)) throw domain_error("terminal set " + s.to_string() + " has a vertex >= n");
  if (s.size() <= 1) return ExtLength::finite(0);
  const std::uint64_t free = g.vertices().bits() & ~s.bits();
  int best = -1;
  for (std::uint64_t sub = free;; sub = (sub - 1) & free) {
    const VertexSet w(s.bits() | sub);
    if ((best < 0 || w.size() - 1 < best) && is_connected_within(g, w)) best = w.size() - 1;
    if (sub == 0) break;
  }
  return best < 0 ? ExtLength::infinite() : ExtLength::finite(best);
}

// e_k(v): largest Steiner distance over k-sets containing v.
inline ExtLength steiner_ecc(const Graph& g, int v, int k) {
  const int n = g.order();
  if (v < 0 || v >= n) throw domain_error("vertex " + std::to_string(v) + " out of range");
  if (k < 1 || k > n) throw domain_error("k must be in [1, n], got " + std::to_string(k));
  SteinerSolver solver(g);
  ExtLength best = ExtLength::finite(0);
  for_each_subset_of_size(g.vertices() - VertexSet::single(v), k - 1, [&](VertexSet rest) {
    best = std::max(best, solver.distance(rest | VertexSet::single(v)));
    return best.is_finite();
  });
  return best;
}

struct SteinerReport {
  int k = 0;
  std::vector<ExtLength> per_vertex_ecc;
  ExtLength sdiam;
  ExtLength srad;
  // Realizing tree for the first k-set (in enumeration order) that attains
  // sdiam; absent when sdiam is infinite.
  std::optional<SteinerTree> witness;
  VertexSet witness_terminals;
};

namespace detail {

inline void check_k(const Graph& g, int k) {
  if (k < 1 || k > g.order()) {
    throw domain_error("k must be in [1, n] = [1, " + std::to_string(g.order()) + "], got " +
                       std::to_string(k));
  }
}

// Exact d(S) using the cheap bounds when they settle it.
inline int settle(SteinerSolver& solver, VertexSet s, int ub) {
  const int k = s.size();
  if (k == 2) {
    const int a = s.min();
    return solver.distances().raw(a, (s - VertexSet::single(a)).min());
  }
  if (is_connected_within(solver.graph(), s)) return k - 1;
  // A disconnected G[S] needs at least one vertex outside S.
  if (std::max(solver.lower_bound(s), k) == ub) return ub;
  return static_cast<int>(solver.distance(s).value());
}

}  // namespace detail

inline SteinerReport steiner_report(const Graph& g, int k) {
  detail::check_k(g, k);
  const int n = g.order();
  SteinerReport rep;
  rep.k = k;
  if (k == 1) {
    rep.per_vertex_ecc.assign(static_cast<std::size_t>(n), ExtLength::finite(0));
    rep.sdiam = rep.srad = ExtLength::finite(0);
    rep.witness = SteinerTree{VertexSet::single(0), {}};
    rep.witness_terminals = VertexSet::single(0);
    return rep;
  }
  if (!is_connected(g)) {
    rep.per_vertex_ecc.assign(static_cast<std::size_t>(n), ExtLength::infinite());
    rep.sdiam = rep.srad = ExtLength::infinite();
    return rep;
  }

  SteinerSolver solver(g);
  // Every vertex lies in some k-set and d(S) >= k-1, so k-1 is a valid floor.
  std::vector<int> ecc(static_cast<std::size_t>(n), k - 1);
  int best = -1;
  VertexSet best_set;
  for_each_subset_of_size(g.vertices(), k, [&](VertexSet s) {
    int floor = n;
    for (int v : s) floor = std::min(floor, ecc[v]);
    const int ub = k >= 4 ? solver.upper_bound(s) : n;
    // Skipping is safe only when d(S) can raise no eccentricity.
    if (best >= 0 && ub <= floor) return;
    const int d = detail::settle(solver, s, ub);
    for (int v : s) ecc[v] = std::max(ecc[v], d);
    if (d > best) {
      best = d;
      best_set = s;
    }
  });

  rep.per_vertex_ecc.reserve(static_cast<std::size_t>(n));
  for (int e : ecc) rep.per_vertex_ecc.push_back(ExtLength::finite(e));
  rep.sdiam = ExtLength::finite(*std::max_element(ecc.begin(), ecc.end()));
  rep.srad = ExtLength::finite(*std::min_element(ecc.begin(), ecc.end()));
  rep.witness = solver.tree(best_set);
  rep.witness_terminals = best_set;
  return rep;
}

// sdiam_k alone. Subsets whose upper bound cannot beat the running maximum are
// skipped, and the scan stops once the maximum reaches n-1.
inline ExtLength steiner_diameter(const Graph& g, int k, SteinerSolver* reuse = nullptr) {
  detail::check_k(g, k);
  const int n = g.order();
  if (k == 1) return ExtLength::finite(0);
  if (!is_connected(g)) return ExtLength::infinite();
  std::optional<SteinerSolver> own;
  if (!reuse) own.emplace(g);
  SteinerSolver& solver = reuse ? *reuse : *own;
  if (k == 2) {
    int diam = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) diam = std::max(diam, solver.distances().raw(u, v));
    return ExtLength::finite(diam);
  }
  int best = k - 1;
  for_each_subset_of_size(g.vertices(), k, [&](VertexSet s) {
    const int ub = k >= 4 ? solver.upper_bound(s) : n;
    if (ub <= best) return true;
    best = std::max(best, detail::settle(solver, s, ub));
    return best < n - 1;
  });
  return ExtLength::finite(best);
}

// d(v, T): distance from v to the nearest vertex of a subtree T of g.
inline ExtLength distance_to_subtree(const Graph& g, int v, const SteinerTree& tree) {
  const int n = g.order();
  if (v < 0 || v >= n) throw domain_error("vertex " + std::to_string(v) + " out of range");
  if (tree.vertices.empty() || !tree.vertices.fits(n)) throw domain_error("tree has no valid vertex set");
  Graph t(n);
  for (Edge e : tree.edges) {
    if (e.u < 0 || e.v >= n || e.u == e.v || !g.adjacent(e.u, e.v) || !tree.vertices.contains(e.u) ||
        !tree.vertices.contains(e.v)) {
      throw domain_error("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                         ") is not an edge of the host graph inside the tree");
    }
    t = t.with_edge(e.u, e.v);
  }
  if (t.size() != tree.vertices.size() - 1 || !is_connected_within(t, tree.vertices)) {
    throw domain_error("edge list is not a tree on its vertex set");
  }
  const DistanceMatrix d(g);
  int best = DistanceMatrix::unreachable;
  for (int u : tree.vertices) best = std::min(best, d.raw(v, u));
  return best == DistanceMatrix::unreachable ? ExtLength::infinite() : ExtLength::finite(best);
}

}  // namespace sdiam
