#pragma once

// Isomorphism testing by backtracking over vertex maps, pruned by degree and
// by the multiset of neighbour degrees. Intended for n <= 10.

#include <algorithm>
#include <array>
#include <vector>

#include "sdiam/graph.hpp"

namespace sdiam {

namespace detail {

inline std::vector<std::vector<int>> vertex_signatures(const Graph& g) {
  std::vector<std::vector<int>> sig(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) {
    auto& s = sig[v];
    s.push_back(g.degree(v));
    for (int w : g.neighbors(v)) s.push_back(g.degree(w));
    std::sort(s.begin() + 1, s.end());
  }
  return sig;
}

class IsoSearch {
 public:
  IsoSearch(const Graph& g, const Graph& h)
      : g_(g), h_(h), sg_(vertex_signatures(g)), sh_(vertex_signatures(h)) {
    map_.fill(-1);
    // Map the most constrained (highest degree) vertices first.
    order_.resize(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) order_[v] = v;
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
  }

  bool run() { return extend(0, 0); }

 private:
  bool extend(std::size_t depth, std::uint64_t used) {
    if (depth == order_.size()) return true;
    const int v = order_[depth];
    for (int w = 0; w < h_.order(); ++w) {
      if ((used >> w) & 1U) continue;
      if (sg_[v] != sh_[w]) continue;
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i) {
        const int u = order_[i];
        ok = g_.adjacent(u, v) == h_.adjacent(map_[u], w);
      }
      if (!ok) continue;
      map_[v] = w;
      if (extend(depth + 1, used | (std::uint64_t{1} << w))) return true;
      map_[v] = -1;
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  std::vector<std::vector<int>> sg_;
  std::vector<std::vector<int>> sh_;
  std::vector<int> order_;
  std::array<int, Graph::max_order> map_{};
};

}  // namespace detail

inline bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  if (degree_sequence(g) != degree_sequence(h)) return false;
  auto sg = detail::vertex_signatures(g);
  auto sh = detail::vertex_signatures(h);
  std::sort(sg.begin(), sg.end());
  std::sort(sh.begin(), sh.end());
  if (sg != sh) return false;
  return detail::IsoSearch(g, h).run();
}

}  // namespace sdiam
