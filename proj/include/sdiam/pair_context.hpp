#pragma once

// Lazily computed metrics of a graph and its complement. Claim checks share
// one context per graph so each sdiam_k, kappa and lambda is computed once.

#include <array>
#include <optional>
#include <string>

#include "sdiam/ext_length.hpp"
#include "sdiam/graph.hpp"
#include "sdiam/graph6.hpp"
#include "sdiam/steiner.hpp"
#include "sdiam/structure.hpp"

namespace sdiam {

enum class Side { G = 0, Complement = 1 };

class PairContext {
 public:
  explicit PairContext(Graph g) : sides_{std::move(g), Graph(1)} {
    sides_[1] = sides_[0].complement();
  }

  int order() const noexcept { return sides_[0].order(); }
  const Graph& graph(Side s = Side::G) const noexcept { return sides_[idx(s)]; }

  const std::string& graph6() {
    if (!g6_) g6_ = to_graph6(sides_[0]);
    return *g6_;
  }

  bool connected(Side s = Side::G) {
    auto& c = connected_[idx(s)];
    if (!c) c = is_connected(graph(s));
    return *c;
  }
  bool both_connected() { return connected(Side::G) && connected(Side::Complement); }

  ExtLength sdiam(int k, Side s = Side::G) {
    auto& slot = sdiam_[idx(s)][static_cast<std::size_t>(k)];
    if (!slot) {
      if (k == 1 || !connected(s)) {
        slot = steiner_diameter(graph(s), k);
      } else {
        auto& solver = solver_[idx(s)];
        if (!solver) solver.emplace(graph(s));
        slot = steiner_diameter(graph(s), k, &*solver);
      }
    }
    return *slot;
  }

  SteinerSolver& solver(Side s = Side::G) {
    auto& solver = solver_[idx(s)];
    if (!solver) solver.emplace(graph(s));
    return *solver;
  }

  int kappa(Side s = Side::G) {
    auto& c = kappa_[idx(s)];
    if (!c) c = vertex_connectivity(graph(s));
    return *c;
  }

  int lambda(Side s = Side::G) {
    auto& c = lambda_[idx(s)];
    if (!c) c = edge_connectivity(graph(s));
    return *c;
  }

  // Requires the side to be connected.
  VertexSet cuts(Side s = Side::G) {
    auto& c = cuts_[idx(s)];
    if (!c) c = cut_vertices(graph(s));
    return *c;
  }

 private:
  static std::size_t idx(Side s) noexcept { return static_cast<std::size_t>(s); }

  std::array<Graph, 2> sides_;
  std::optional<std::string> g6_;
  std::array<std::optional<bool>, 2> connected_;
  std::array<std::array<std::optional<ExtLength>, 65>, 2> sdiam_;
  std::array<std::optional<SteinerSolver>, 2> solver_;
  std::array<std::optional<int>, 2> kappa_, lambda_;
  std::array<std::optional<VertexSet>, 2> cuts_;
};

}  // namespace sdiam
