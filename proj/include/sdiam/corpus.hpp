#pragma once

// Graph corpora: exhaustive labeled graphs, Pruefer-enumerated trees, graph6
// files, fixed-seed random graphs and the named families.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <fstream>
#include <functional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "sdiam/errors.hpp"
#include "sdiam/families.hpp"
#include "sdiam/graph.hpp"
#include "sdiam/graph6.hpp"
#include "sdiam/structure.hpp"

namespace sdiam {

inline constexpr int labeled_max_order = 8;
inline constexpr int trees_max_order = 12;

// Edge i of the C(n,2) possible edges in graph6 bit order (0,1),(0,2),(1,2),...
inline std::vector<Edge> graph6_edge_order(int n) {
  std::vector<Edge> out;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) out.emplace_back(i, j);
  return out;
}

// Calls fn(graph) for every labeled graph on n vertices, in increasing order of
// the edge-subset mask (bit i = edge i in graph6 order).
template <typename Fn>
void for_each_labeled(int n, bool connected_only, Fn&& fn) {
  if (n < 1 || n > labeled_max_order) {
    throw capacity_error("labeled enumeration supports 1 <= n <= " + std::to_string(labeled_max_order));
  }
  const std::vector<Edge> order = graph6_edge_order(n);
  const std::size_t m = order.size();
  std::array<std::uint64_t, Graph::max_order> rows{};
  const std::uint64_t total = std::uint64_t{1} << m;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (int v = 0; v < n; ++v) rows[v] = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if ((mask >> i) & 1U) {
        rows[order[i].u] |= std::uint64_t{1} << order[i].v;
        rows[order[i].v] |= std::uint64_t{1} << order[i].u;
      }
    }
    Graph g = Graph::from_rows(n, std::span<const std::uint64_t>(rows.data(), static_cast<std::size_t>(n)));
    if (connected_only && !is_connected(g)) continue;
    fn(g);
  }
}

// Materializes the stream; intended for small n (n = 7 is ~2 million graphs).
inline std::vector<Graph> enumerate_labeled(int n, bool connected_only) {
  std::vector<Graph> out;
  for_each_labeled(n, connected_only, [&](const Graph& g) { out.push_back(g); });
  return out;
}

// Tree with the given Pruefer sequence over {0..n-1}.
inline Graph tree_from_pruefer(int n, std::span<const int> seq) {
  if (n < 2 || static_cast<int>(seq.size()) != n - 2) throw parameter_error("Pruefer sequence must have length n-2");
  std::array<int, Graph::max_order> degree{};
  for (int v = 0; v < n; ++v) degree[v] = 1;
  for (int a : seq) {
    if (a < 0 || a >= n) throw parameter_error("Pruefer entry out of range");
    ++degree[a];
  }
  std::array<std::uint64_t, Graph::max_order> rows{};
  auto link = [&](int u, int v) {
    rows[u] |= std::uint64_t{1} << v;
    rows[v] |= std::uint64_t{1} << u;
  };
  int ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int a : seq) {
    link(leaf, a);
    if (--degree[a] == 1 && a < ptr) {
      leaf = a;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  link(leaf, n - 1);
  return Graph::from_rows(n, std::span<const std::uint64_t>(rows.data(), static_cast<std::size_t>(n)));
}

// Every labeled tree on n vertices, once each, in lexicographic order of the
// Pruefer sequence.
template <typename Fn>
void for_each_tree(int n, Fn&& fn) {
  if (n < 2 || n > trees_max_order) {
    throw capacity_error("tree enumeration supports 2 <= n <= " + std::to_string(trees_max_order));
  }
  std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
  while (true) {
    fn(tree_from_pruefer(n, seq));
    int i = n - 3;
    while (i >= 0 && seq[static_cast<std::size_t>(i)] == n - 1) seq[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) return;
    ++seq[static_cast<std::size_t>(i)];
  }
}

inline std::vector<Graph> enumerate_trees(int n) {
  std::vector<Graph> out;
  for_each_tree(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

namespace detail {

struct RootedCode {
  std::uint32_t bits = 0;
  int len = 0;
  // Left-aligned value; balanced codes are prefix-free, so this orders them
  // lexicographically.
  std::uint32_t key() const noexcept { return len == 0 ? 0 : bits << (32 - len); }
};

// AHU code of t rooted at `root`: 1, children's codes in decreasing order, 0.
// Requires n <= 16 so a code fits in 32 bits.
inline std::uint32_t rooted_code(const Graph& t, int root) {
  std::array<int, 16> order{}, parent{};
  std::array<RootedCode, 16> code{};
  int head = 0, tail = 0;
  order[tail++] = root;
  parent[root] = -1;
  while (head < tail) {
    const int v = order[head++];
    for (int w : t.neighbors(v)) {
      if (w != parent[v]) {
        parent[w] = v;
        order[tail++] = w;
      }
    }
  }
  for (int i = tail - 1; i >= 0; --i) {
    const int v = order[i];
    std::array<RootedCode, 16> kids;
    std::array<std::uint32_t, 16> keys;
    int m = 0;
    for (int w : t.neighbors(v)) {
      if (w == parent[v]) continue;
      // Insertion sort by decreasing key.
      const RootedCode c = code[w];
      const std::uint32_t k = c.key();
      int j = m++;
      while (j > 0 && keys[j - 1] < k) {
        keys[j] = keys[j - 1];
        kids[j] = kids[j - 1];
        --j;
      }
      keys[j] = k;
      kids[j] = c;
    }
    RootedCode out{1, 1};
    for (int j = 0; j < m; ++j) {
      out.bits = (out.bits << kids[j].len) | kids[j].bits;
      out.len += kids[j].len;
    }
    out.bits <<= 1;
    out.len += 1;
    code[v] = out;
  }
  return code[root].bits;
}

}  // namespace detail

namespace detail {
inline std::uint64_t tree_code_unchecked(const Graph& t);
}  // namespace detail

// Canonical code of a tree with n <= 16: equal codes iff isomorphic trees.
// Rooted at the center (the smaller code of the two centers if bicentral).
inline std::uint64_t tree_canonical_code(const Graph& t) {
  const int n = t.order();
  if (n > 16) throw capacity_error("tree_canonical_code supports n <= 16");
  if (!is_tree(t)) throw domain_error("tree_canonical_code requires a tree");
  return detail::tree_code_unchecked(t);
}

namespace detail {

inline std::uint64_t tree_code_unchecked(const Graph& t) {
  const int n = t.order();
  // Peel leaves until one or two centers remain.
  std::uint64_t left = VertexSet::first(n).bits();
  while (std::popcount(left) > 2) {
    std::uint64_t leaves = 0;
    for (std::uint64_t rest = left; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if (std::popcount(t.row(v) & left) <= 1) leaves |= std::uint64_t{1} << v;
    }
    left &= ~leaves;
  }
  std::uint32_t best = rooted_code(t, std::countr_zero(left));
  left &= left - 1;
  if (left) best = std::min(best, rooted_code(t, std::countr_zero(left)));
  return (std::uint64_t{static_cast<std::uint32_t>(n)} << 32) | best;
}

}  // namespace detail

// Each of the C(n,2) pairs, in graph6 order, becomes an edge with probability p
// (one 64-bit draw per pair compared against a fixed threshold).
inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  if (p < 0.0 || p > 1.0) throw parameter_error("edge probability must be in [0, 1]");
  const long double scaled = static_cast<long double>(p) * 18446744073709551616.0L;
  const std::uint64_t threshold = p >= 1.0 ? UINT64_MAX : static_cast<std::uint64_t>(scaled);
  Graph g(n);
  std::array<std::uint64_t, Graph::max_order> rows{};
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (rng() < threshold || p >= 1.0) {
        rows[i] |= std::uint64_t{1} << j;
        rows[j] |= std::uint64_t{1} << i;
      }
    }
  }
  return Graph::from_rows(n, std::span<const std::uint64_t>(rows.data(), static_cast<std::size_t>(n)));
}

enum class RandomFilter { None, Connected, BothConnected };

inline const std::array<double, 5>& random_densities() {
  static const std::array<double, 5> d{0.2, 0.35, 0.5, 0.65, 0.8};
  return d;
}

// `count` accepted graphs of order n, cycling through the fixed densities.
template <typename Fn>
void for_each_random(int n, std::size_t count, std::uint64_t seed, RandomFilter filter, Fn&& fn) {
  std::mt19937_64 rng(seed);
  const auto& dens = random_densities();
  std::size_t accepted = 0, attempts = 0;
  const std::size_t max_attempts = 1000 * std::max<std::size_t>(count, 1);
  while (accepted < count) {
    if (++attempts > max_attempts) throw config_error("random corpus filter rejects nearly every sample");
    const Graph g = random_graph(n, dens[attempts % dens.size()], rng);
    if (filter == RandomFilter::Connected && !is_connected(g)) continue;
    if (filter == RandomFilter::BothConnected && !(is_connected(g) && is_connected(g.complement()))) continue;
    ++accepted;
    fn(g);
  }
}

// Every named family member with order in [lo, hi], in a fixed order.
inline std::vector<Graph> named_families(int lo, int hi) {
  std::vector<Graph> out;
  auto add = [&](const FamilySpec& s) { out.push_back(generate(s)); };
  for (int n = std::max(lo, 1); n <= hi; ++n) {
    add(PathSpec{n});
    add(CompleteSpec{n});
    if (n >= 3) add(CycleSpec{n});
    for (int s = 1; s <= n - 1 - s; ++s) add(CompleteBipartiteSpec{s, n - s});
    if (n >= 2) add(StarSpec{n - 1});
    for (int s = 0; s <= n - 2 - s; ++s) add(DoubleStarSpec{s, n - 2 - s});
    for (int a = 0; a <= n - 1; ++a)
      for (int b = std::max(a, 1); a + 2 * b <= n - 1; ++b) add(SpiderSpec{a, b, n - 1 - a - b});
    for (int p = 0; 3 * p <= n - 3; ++p)
      for (int q = p; p + 2 * q <= n - 3; ++q) add(TriangleSpiderSpec{p, q, n - 3 - p - q});
    for (int a = 0; 3 * a <= n - 3; ++a)
      for (int b = a; a + 2 * b <= n - 3; ++b)
        if (n - 3 - a - b >= 1) add(TripleStarSpec{a, b, n - 3 - a - b});
    if (n >= 4) {
      // H2 pattern multisets of size n-3, as non-decreasing sequences.
      std::vector<int> idx(static_cast<std::size_t>(n - 3), 0);
      while (true) {
        H2Spec h;
        for (int i : idx) h.patterns.push_back(static_cast<H2Pattern>(i));
        add(h);
        int i = n - 4;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == 4) --i;
        if (i < 0) break;
        const int next = idx[static_cast<std::size_t>(i)] + 1;
        for (int j = i; j < n - 3; ++j) idx[static_cast<std::size_t>(j)] = next;
      }
      add(StarPathSpec{n});
    }
    if (n >= 5) {
      const int m = n - 4;
      add(Example2Spec{complete_graph(m)});
      if (m >= 2) {
        add(Example2Spec{Graph(m)});
        add(Example2Spec{path_graph(m)});
      }
      if (m >= 3) add(Example2Spec{cycle_graph(m)});
    }
  }
  return out;
}

// Calls fn(graph, line_number) for each graph6 line. Blank lines are skipped.
// In strict mode a bad line throws a decode_error naming the line; otherwise
// on_skip(line_number, message) is called and the line is skipped.
template <typename Fn, typename Skip>
void for_each_graph6_line(std::istream& in, bool strict, Fn&& fn, Skip&& on_skip) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      fn(from_graph6(line), line_no);
    } catch (const decode_error& e) {
      const decode_error located = e.at_line(line_no);
      if (strict) throw located;
      on_skip(line_no, std::string(located.what()));
    }
  }
}

template <typename Fn, typename Skip>
void ingest_graph6_file(const std::string& path, bool strict, Fn&& fn, Skip&& on_skip) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open " + path);
  for_each_graph6_line(in, strict, fn, on_skip);
  if (in.bad()) throw io_error("read failure on " + path);
}

inline std::vector<Graph> ingest_graph6_file(const std::string& path, bool strict = true) {
  std::vector<Graph> out;
  ingest_graph6_file(path, strict, [&](const Graph& g, std::size_t) { out.push_back(g); },
                     [](std::size_t, const std::string&) {});
  return out;
}

}  // namespace sdiam
