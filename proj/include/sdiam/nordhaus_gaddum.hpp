#pragma once

// Complement-pair metrics and checks of the Nordhaus-Gaddum type bounds for
// sdiam_k. Every check returns a TheoremVerdict; claims whose hypotheses fail
// are Vacuous, and graphs below a claim's stated order are evaluated anyway
// but marked out of range so a mismatch is informational only.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "sdiam/errors.hpp"
#include "sdiam/ext_length.hpp"
#include "sdiam/graph.hpp"
#include "sdiam/pair_context.hpp"
#include "sdiam/recognizers.hpp"
#include "sdiam/structure.hpp"

namespace sdiam {

struct PairMetrics {
  int k = 0;
  ExtLength d_g, d_gc, sum, product;
};

inline PairMetrics pair_metrics(PairContext& ctx, int k) {
  if (k < 2 || k > ctx.order()) throw domain_error("k must be in [2, n], got " + std::to_string(k));
  PairMetrics m;
  m.k = k;
  m.d_g = ctx.sdiam(k, Side::G);
  m.d_gc = ctx.sdiam(k, Side::Complement);
  m.sum = m.d_g + m.d_gc;
  m.product = m.d_g * m.d_gc;
  return m;
}

inline PairMetrics pair_metrics(const Graph& g, int k) {
  PairContext ctx(g);
  return pair_metrics(ctx, k);
}

struct BoundSpec {
  int k = 0, n = 0, x = 0;
  std::int64_t lower_sum = 0, upper_sum = 0, lower_prod = 0, upper_prod = 0;
};

inline BoundSpec bound_spec(int n, int k) {
  BoundSpec b;
  b.k = k;
  b.n = n;
  b.x = n >= 2 * k - 2 ? 0 : 1;
  b.upper_sum = std::max(n + k - 1, 4 * k - 2);
  b.upper_prod = std::max<std::int64_t>(std::int64_t{k} * (n - 1), std::int64_t{2 * k - 1} * (2 * k - 1));
  b.lower_sum = 2 * k - 1 - b.x;
  b.lower_prod = std::int64_t{k - 1} * (k - b.x);
  return b;
}

enum class VerdictStatus { Holds, Violated, Vacuous };

inline std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Holds: return "holds";
    case VerdictStatus::Violated: return "violated";
    case VerdictStatus::Vacuous: return "vacuous";
  }
  return "?";
}

struct TheoremVerdict {
  std::string claim_id;
  std::string graph6;
  VerdictStatus status = VerdictStatus::Holds;
  bool in_range = true;
  std::string detail;
  std::vector<std::string> flags;

  bool holds() const noexcept { return status != VerdictStatus::Violated; }
};

namespace detail {

inline TheoremVerdict verdict(PairContext& ctx, std::string id) {
  TheoremVerdict v;
  v.claim_id = std::move(id);
  v.graph6 = ctx.graph6();
  return v;
}

inline TheoremVerdict vacuous(PairContext& ctx, std::string id, std::string why) {
  TheoremVerdict v = verdict(ctx, std::move(id));
  v.status = VerdictStatus::Vacuous;
  v.detail = std::move(why);
  return v;
}

inline void require(TheoremVerdict& v, bool ok, const std::string& what) {
  if (ok) return;
  v.status = VerdictStatus::Violated;
  if (!v.detail.empty()) v.detail += "; ";
  v.detail += what;
}

inline bool within(ExtLength x, std::int64_t lo, std::int64_t hi) {
  return x.is_finite() && x.value() >= lo && x.value() <= hi;
}

inline std::string values(const PairMetrics& m) {
  return "k=" + std::to_string(m.k) + " d_g=" + m.d_g.to_string() + " d_gc=" + m.d_gc.to_string() +
         " sum=" + m.sum.to_string() + " product=" + m.product.to_string();
}

}  // namespace detail

// 2k-1-x <= sum <= max(n+k-1, 4k-2) and the matching product window, plus the
// proof's tightness step: sum = 2k-2 forces n <= 2k-3.
inline TheoremVerdict check_th5(PairContext& ctx, int k) {
  const int n = ctx.order();
  if (k < 3 || k > n) throw domain_error("th5 requires 3 <= k <= n");
  if (!ctx.both_connected()) return detail::vacuous(ctx, "th5", "k=" + std::to_string(k) + " complement pair not both connected");
  TheoremVerdict v = detail::verdict(ctx, "th5");
  const PairMetrics m = pair_metrics(ctx, k);
  const BoundSpec b = bound_spec(n, k);
  const bool sum_ok = detail::within(m.sum, b.lower_sum, b.upper_sum);
  const bool prod_ok = detail::within(m.product, b.lower_prod, b.upper_prod);
  v.detail = detail::values(m) + " x=" + std::to_string(b.x);
  if (!sum_ok || !prod_ok) {
    // Would the other reading of the x clause have accepted the pair?
    const int alt = 1 - b.x;
    const bool alt_ok = detail::within(m.sum, 2 * k - 1 - alt, b.upper_sum) &&
                        detail::within(m.product, std::int64_t{k - 1} * (k - alt), b.upper_prod);
    if (alt_ok) v.flags.push_back("x_reading");
  }
  detail::require(v, sum_ok, "sum outside [" + std::to_string(b.lower_sum) + "," + std::to_string(b.upper_sum) + "]");
  detail::require(v, prod_ok, "product outside [" + std::to_string(b.lower_prod) + "," + std::to_string(b.upper_prod) + "]");
  detail::require(v, !(m.sum == 2 * k - 2) || n <= 2 * k - 3, "sum = 2k-2 with n > 2k-3");
  return v;
}

inline TheoremVerdict check_th5(const Graph& g, int k) {
  PairContext ctx(g);
  return check_th5(ctx, k);
}

// sdiam_k(G) >= 2k implies sdiam_k(complement) <= k.
inline TheoremVerdict check_pro6(PairContext& ctx, int k) {
  if (k < 2 || k > ctx.order()) throw domain_error("pro6 requires 2 <= k <= n");
  if (!ctx.connected()) return detail::vacuous(ctx, "pro6", "G disconnected");
  TheoremVerdict v = detail::verdict(ctx, "pro6");
  const ExtLength d = ctx.sdiam(k);
  if (ext_ge(d, 2 * k)) {
    const ExtLength dc = ctx.sdiam(k, Side::Complement);
    v.detail = "k=" + std::to_string(k) + " d_g=" + d.to_string() + " d_gc=" + dc.to_string();
    detail::require(v, ext_le(dc, k), "complement side exceeds k");
  } else {
    v.detail = "k=" + std::to_string(k) + " antecedent false (d_g=" + d.to_string() + ")";
  }
  return v;
}

inline TheoremVerdict check_pro6(const Graph& g, int k) {
  PairContext ctx(g);
  return check_pro6(ctx, k);
}

// k = n: both sides equal n-1, so sum = 2n-2 and product = (n-1)^2.
inline TheoremVerdict check_obs3_k_equals_n(PairContext& ctx) {
  const int n = ctx.order();
  if (!ctx.both_connected()) return detail::vacuous(ctx, "obs3n", "complement pair not both connected");
  TheoremVerdict v = detail::verdict(ctx, "obs3n");
  v.in_range = n >= 3;
  const ExtLength a = ctx.sdiam(n), b = ctx.sdiam(n, Side::Complement);
  v.detail = "d_g=" + a.to_string() + " d_gc=" + b.to_string();
  detail::require(v, a == n - 1 && b == n - 1, "a side differs from n-1");
  detail::require(v, (a + b) == 2 * n - 2, "sum differs from 2n-2");
  detail::require(v, (a * b) == std::int64_t{n - 1} * (n - 1), "product differs from (n-1)^2");
  return v;
}

inline TheoremVerdict check_obs3_k_equals_n(const Graph& g) {
  PairContext ctx(g);
  return check_obs3_k_equals_n(ctx);
}

// sdiam_{n-1}(G) = n-2 iff G is 2-connected.
inline TheoremVerdict check_lemM(PairContext& ctx) {
  const int n = ctx.order();
  if (n < 3 || !ctx.connected()) return detail::vacuous(ctx, "lemM", "requires connected G with n >= 3");
  TheoremVerdict v = detail::verdict(ctx, "lemM");
  const bool two = ctx.kappa() >= 2;
  const ExtLength d = ctx.sdiam(n - 1);
  v.detail = "2-connected=" + std::string(two ? "yes" : "no") + " sdiam_{n-1}=" + d.to_string();
  detail::require(v, two == (d == n - 2), "equivalence fails");
  return v;
}

inline TheoremVerdict check_lemM(const Graph& g) {
  PairContext ctx(g);
  return check_lemM(ctx);
}

// Some bipartition (A, B) of the vertex set, both sides nonempty, with every
// A-B pair adjacent. Equivalently the complement is disconnected.
inline bool has_spanning_complete_bipartite(const Graph& g) {
  const int n = g.order();
  if (n < 2) return false;
  if (n > 24) throw capacity_error("bipartition scan supports n <= 24");
  // Vertex n-1 is fixed on side B to visit each unordered bipartition once.
  const std::uint64_t limit = std::uint64_t{1} << (n - 1);
  for (std::uint64_t a = 1; a < limit; ++a) {
    const VertexSet A(a);
    const VertexSet B = g.vertices() - A;
    bool ok = true;
    for (int u : A) {
      if (!B.subset_of(g.neighbors(u))) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

// Condition (i) or (ii) of the Akiyama-Harary characterization.
inline bool akiyama_harary_holds(const Graph& g) {
  const int n = g.order();
  if (!is_connected(g) || !is_connected(g.complement())) {
    throw domain_error("akiyama_harary_holds requires G and its complement connected");
  }
  if (vertex_connectivity(g) != 1) return false;
  const int delta_max = max_degree(g);
  if (delta_max == n - 2) return true;
  if (delta_max > n - 3) return false;
  const VertexSet cuts = cut_vertices(g);
  for (int u = 0; u < n; ++u) {
    if (g.degree(u) != 1) continue;
    const int v = g.neighbors(u).min();
    if (!cuts.contains(v)) continue;
    if (has_spanning_complete_bipartite(g.induced(g.vertices() - VertexSet::single(u)))) return true;
  }
  return false;
}

// akiyama_harary_holds(G) iff kappa(G) = kappa(complement) = 1.
inline TheoremVerdict check_lem0(PairContext& ctx) {
  if (!ctx.both_connected()) return detail::vacuous(ctx, "lem0", "complement pair not both connected");
  TheoremVerdict v = detail::verdict(ctx, "lem0");
  const bool ah = akiyama_harary_holds(ctx.graph());
  const bool both_one = ctx.kappa() == 1 && ctx.kappa(Side::Complement) == 1;
  v.detail = "conditions=" + std::string(ah ? "yes" : "no") + " kappa=" + std::to_string(ctx.kappa()) +
             " kappa_c=" + std::to_string(ctx.kappa(Side::Complement));
  detail::require(v, ah == both_one, "equivalence fails");
  return v;
}

inline TheoremVerdict check_lem0(const Graph& g) {
  PairContext ctx(g);
  return check_lem0(ctx);
}

// k = n-1: the window plus the three-way case split (a) both 2-connected,
// (b) one side of connectivity 1 and the other 2-connected, (c) the
// Akiyama-Harary conditions.
inline TheoremVerdict check_proA(PairContext& ctx) {
  const int n = ctx.order();
  if (n < 3 || !ctx.both_connected()) return detail::vacuous(ctx, "proA", "requires both sides connected, n >= 3");
  TheoremVerdict v = detail::verdict(ctx, "proA");
  v.in_range = n >= 5;
  const PairMetrics m = pair_metrics(ctx, n - 1);
  const std::int64_t N = n;
  v.detail = detail::values(m);
  detail::require(v, detail::within(m.sum, 2 * N - 4, 2 * N - 2), "sum outside [2n-4, 2n-2]");
  detail::require(v, detail::within(m.product, (N - 2) * (N - 2), (N - 1) * (N - 1)), "product outside [(n-2)^2, (n-1)^2]");

  const int kg = ctx.kappa(), kc = ctx.kappa(Side::Complement);
  const int lg = ctx.lambda(), lc = ctx.lambda(Side::Complement);
  const bool case_a = kg >= 2 && kc >= 2;
  const bool case_b = (kg == 1 && kc >= 2) || (kc == 1 && kg >= 2);
  const bool case_b_lambda = (lg == 1 && kc >= 2) || (lc == 1 && kg >= 2);
  const bool case_c = akiyama_harary_holds(ctx.graph());

  const bool is_a = m.sum == 2 * N - 4 || m.product == (N - 2) * (N - 2);
  const bool is_b = m.sum == 2 * N - 3 || m.product == (N - 1) * (N - 2);
  const bool is_c = m.sum == 2 * N - 2 || m.product == (N - 1) * (N - 1);
  detail::require(v, is_a == case_a, "(a) equivalence fails");
  detail::require(v, is_b == case_b, "(b) equivalence fails");
  detail::require(v, is_c == case_c, "(c) equivalence fails");
  detail::require(v, int{case_a} + int{case_b} + int{case_c} == 1, "case split is not a partition");

  if (case_b != case_b_lambda) v.flags.push_back("proA_b_lambda_form_differs");
  if (is_b) {
    v.detail += std::string(" kappa_form=") + (case_b ? "yes" : "no") + " lambda_form=" + (case_b_lambda ? "yes" : "no");
  }
  return v;
}

inline TheoremVerdict check_proA(const Graph& g) {
  PairContext ctx(g);
  return check_proA(ctx);
}

// k = n-2: the wide window when both sides have at least two cut vertices,
// the narrow one otherwise.
inline TheoremVerdict check_proB(PairContext& ctx) {
  const int n = ctx.order();
  if (n < 4 || !ctx.both_connected()) return detail::vacuous(ctx, "proB", "requires both sides connected, n >= 4");
  TheoremVerdict v = detail::verdict(ctx, "proB");
  v.in_range = n >= 5;
  const PairMetrics m = pair_metrics(ctx, n - 2);
  const std::int64_t N = n;
  const bool both_two_cuts = ctx.cuts().size() >= 2 && ctx.cuts(Side::Complement).size() >= 2;
  v.detail = detail::values(m) + (both_two_cuts ? " branch=both_two_cuts" : " branch=otherwise");
  const std::int64_t hi_sum = both_two_cuts ? 2 * N - 2 : 2 * N - 3;
  const std::int64_t hi_prod = both_two_cuts ? (N - 1) * (N - 1) : (N - 1) * (N - 2);
  detail::require(v, detail::within(m.sum, 2 * N - 6, hi_sum), "sum outside window");
  detail::require(v, detail::within(m.product, (N - 3) * (N - 3), hi_prod), "product outside window");
  if (n == 4 && is_path(ctx.graph()) && is_path(ctx.graph(Side::Complement))) {
    v.flags.push_back("example1_label: sum 6 is printed as 2n-4 but equals 2n-2 at n=4");
  }
  return v;
}

inline TheoremVerdict check_proB(const Graph& g) {
  PairContext ctx(g);
  return check_proB(ctx);
}

// k = 3: 6 <= sum <= n+2 and 9 <= product <= 3(n-1).
inline TheoremVerdict check_proC(PairContext& ctx) {
  const int n = ctx.order();
  if (n < 3 || !ctx.both_connected()) return detail::vacuous(ctx, "proC", "requires both sides connected, n >= 3");
  TheoremVerdict v = detail::verdict(ctx, "proC");
  v.in_range = n >= 10;
  const PairMetrics m = pair_metrics(ctx, 3);
  v.detail = detail::values(m);
  detail::require(v, detail::within(m.sum, 6, n + 2), "sum outside [6, n+2]");
  detail::require(v, detail::within(m.product, 9, 3 * (n - 1)), "product outside [9, 3(n-1)]");
  return v;
}

inline TheoremVerdict check_proC(const Graph& g) {
  PairContext ctx(g);
  return check_proC(ctx);
}

}  // namespace sdiam
