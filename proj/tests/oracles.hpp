#pragma once

// Slow, independent reference implementations used only by the tests. They
// work on a plain adjacency matrix and share no code with the library beyond
// reading adjacency out of a Graph.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "sdiam/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix matrix(const sdiam::Graph& g) {
  const int n = g.order();
  Matrix a(n, std::vector<bool>(n, false));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) a[u][v] = g.adjacent(u, v);
  return a;
}

// Is the set `keep` (bitmask) connected in a? Empty and singleton sets are.
inline bool connected(const Matrix& a, std::uint64_t keep) {
  const int n = static_cast<int>(a.size());
  int start = -1, count = 0;
  for (int v = 0; v < n; ++v) {
    if ((keep >> v) & 1) {
      if (start < 0) start = v;
      ++count;
    }
  }
  if (count <= 1) return true;
  std::vector<bool> seen(n, false);
  std::vector<int> stack{start};
  seen[start] = true;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < n; ++w) {
      if (a[v][w] && ((keep >> w) & 1) && !seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == count;
}

inline std::uint64_t all(int n) { return n == 64 ? ~0ULL : (1ULL << n) - 1; }

// Steiner distance as min |W| - 1 over connected W containing s; -1 if none.
inline int steiner(const Matrix& a, std::uint64_t s) {
  const int n = static_cast<int>(a.size());
  if (__builtin_popcountll(s) <= 1) return 0;
  int best = -1;
  for (std::uint64_t w = 0; w <= all(n); ++w) {
    if ((w & s) != s) continue;
    const int size = __builtin_popcountll(w);
    if (best >= 0 && size - 1 >= best) continue;
    if (connected(a, w)) best = size - 1;
  }
  return best;
}

// sdiam_k by exhaustive terminal enumeration; -1 for infinite.
inline int sdiam(const Matrix& a, int k) {
  const int n = static_cast<int>(a.size());
  int best = 0;
  for (std::uint64_t s = 0; s <= all(n); ++s) {
    if (__builtin_popcountll(s) != k) continue;
    const int d = steiner(a, s);
    if (d < 0) return -1;
    best = std::max(best, d);
  }
  return best;
}

// BFS distances from u; -1 for unreachable.
inline std::vector<int> bfs(const Matrix& a, int u) {
  const int n = static_cast<int>(a.size());
  std::vector<int> d(n, -1);
  std::vector<int> q{u};
  d[u] = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (int w = 0; w < n; ++w) {
      if (a[q[i]][w] && d[w] < 0) {
        d[w] = d[q[i]] + 1;
        q.push_back(w);
      }
    }
  }
  return d;
}

// Smallest vertex set whose removal disconnects the graph; n-1 for complete graphs.
inline int kappa(const Matrix& a) {
  const int n = static_cast<int>(a.size());
  int best = n - 1;
  for (std::uint64_t cut = 0; cut <= all(n); ++cut) {
    const int size = __builtin_popcountll(cut);
    if (size >= best || n - size < 2) continue;
    if (!connected(a, all(n) & ~cut)) best = size;
  }
  return best;
}

// Minimum number of edges across a bipartition; 0 for n = 1.
inline int lambda(const Matrix& a) {
  const int n = static_cast<int>(a.size());
  if (n == 1) return 0;
  int best = n * n;
  for (std::uint64_t x = 1; x < (1ULL << (n - 1)); ++x) {
    int cross = 0;
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (((x >> u) & 1) && !((x >> v) & 1) && a[u][v]) ++cross;
    best = std::min(best, cross);
  }
  return best;
}

inline std::vector<int> cut_vertices(const Matrix& a) {
  const int n = static_cast<int>(a.size());
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (!connected(a, all(n) & ~(1ULL << v))) out.push_back(v);
  return out;
}

// Longest cycle by extending simple paths from their smallest vertex.
inline int circumference(const Matrix& a) {
  const int n = static_cast<int>(a.size());
  int best = 0;
  std::vector<int> path;
  std::vector<bool> used(n, false);
  auto dfs = [&](auto&& self, int start) -> void {
    const int v = path.back();
    if (path.size() >= 3 && a[v][start]) best = std::max(best, static_cast<int>(path.size()));
    for (int w = start + 1; w < n; ++w) {
      if (a[v][w] && !used[w]) {
        used[w] = true;
        path.push_back(w);
        self(self, start);
        path.pop_back();
        used[w] = false;
      }
    }
  };
  for (int s = 0; s < n; ++s) {
    path = {s};
    used.assign(n, false);
    used[s] = true;
    dfs(dfs, s);
  }
  return best;
}

// Exhaustive permutation search.
inline bool isomorphic(const Matrix& a, const Matrix& b) {
  const int n = static_cast<int>(a.size());
  if (static_cast<int>(b.size()) != n) return false;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = 0; v < n && ok; ++v)
        if (a[u][v] != b[p[u]][p[v]]) ok = false;
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// graph6 written bit by bit from the format description.
inline std::string graph6(const Matrix& a) {
  const int n = static_cast<int>(a.size());
  std::string bits;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits += a[i][j] ? '1' : '0';
  while (bits.size() % 6) bits += '0';
  std::string out(1, static_cast<char>(n + 63));
  for (std::size_t i = 0; i < bits.size(); i += 6) out += static_cast<char>(std::stoi(bits.substr(i, 6), nullptr, 2) + 63);
  return out;
}

// Fixed-seed G(n, p) sample.
inline sdiam::Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<sdiam::Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return sdiam::Graph::from_edges(n, edges);
}

inline sdiam::Graph random_connected(int n, double p, std::mt19937_64& rng) {
  while (true) {
    sdiam::Graph g = random_graph(n, p, rng);
    if (connected(matrix(g), all(n))) return g;
  }
}

// Uniform random labeled tree by attaching each vertex to an earlier one,
// then shuffling labels.
inline sdiam::Graph random_tree(int n, std::mt19937_64& rng) {
  std::vector<int> label(n);
  std::iota(label.begin(), label.end(), 0);
  std::shuffle(label.begin(), label.end(), rng);
  std::vector<sdiam::Edge> edges;
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    edges.emplace_back(label[v], label[pick(rng)]);
  }
  return sdiam::Graph::from_edges(n, edges);
}

}  // namespace oracle
