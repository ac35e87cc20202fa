// sdiam: command-line front end.
//
// Exit codes: 0 ok, 1 claim violation or discrepancy, 2 parse/usage error,
// 3 domain or capacity error, 4 I/O error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "sdiam/claims.hpp"
#include "sdiam/corpus.hpp"
#include "sdiam/families.hpp"
#include "sdiam/graph6.hpp"
#include "sdiam/harness.hpp"
#include "sdiam/recognizers.hpp"
#include "sdiam/steiner.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace sdiam;

enum Exit { ok = 0, violation = 1, parse = 2, domain = 3, io = 4 };

json ext(ExtLength x) {
  if (x.is_infinite()) return "inf";
  return x.value();
}

json edges_json(const std::vector<Edge>& edges) {
  json a = json::array();
  for (Edge e : edges) a.push_back({e.u, e.v});
  return a;
}

// A graph6 string, or @path for the first graph in a file.
Graph load_graph(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return from_graph6(arg);
  const std::string path = arg.substr(1);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open " + path);
  std::optional<Graph> first;
  for_each_graph6_line(in, true, [&](const Graph& g, std::size_t) {
    if (!first) first = g;
  }, [](std::size_t, const std::string&) {});
  if (!first) throw decode_error("file " + path + " holds no graph", 0);
  return *first;
}

std::vector<int> parse_ints(const std::string& text, std::size_t count, const std::string& flag) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    const std::string item = text.substr(start, end - start);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw parameter_error(flag + " expects integers, got '" + text + "'");
    out.push_back(v);
    start = end + 1;
  }
  if (out.size() != count) {
    throw parameter_error(flag + " expects " + std::to_string(count) + " comma-separated integers");
  }
  return out;
}

int cmd_metrics(const std::string& g6, int k, bool witness) {
  const Graph g = load_graph(g6);
  if (k < 2 || k > g.order()) throw domain_error("k must be in [2, n] = [2, " + std::to_string(g.order()) + "]");
  const SteinerReport r = steiner_report(g, k);
  json j;
  j["graph6"] = to_graph6(g);
  j["n"] = g.order();
  j["k"] = k;
  j["sdiam"] = ext(r.sdiam);
  j["srad"] = ext(r.srad);
  json ecc = json::array();
  for (ExtLength e : r.per_vertex_ecc) ecc.push_back(ext(e));
  j["per_vertex_ecc"] = ecc;
  if (witness) {
    if (r.witness) {
      j["witness"] = {{"terminals", r.witness_terminals.to_vector()},
                      {"vertices", r.witness->vertices.to_vector()},
                      {"edges", edges_json(r.witness->edges)}};
    } else {
      j["witness"] = nullptr;
    }
  }
  std::cout << j.dump(2) << "\n";
  return ok;
}

int cmd_classify(const std::string& g6, bool as_json) {
  const Graph g = load_graph(g6);
  const int n = g.order();
  if (n < 3) throw domain_error("classify requires n >= 3");
  if (!is_connected(g)) throw domain_error("classify requires a connected graph");
  const Sdiam3Class c = classify_sdiam3(g);
  const ExtLength d = steiner_diameter(g, 3);

  std::vector<std::string> mismatches;
  auto expect = [&](const std::string& name, bool predicted, bool actual) {
    if (predicted != actual) {
      mismatches.push_back(name + " predicted " + (predicted ? "yes" : "no") + " but computed sdiam3 = " +
                           d.to_string());
    }
  };
  const auto has = [&](Sdiam3Kind k) { return std::find(c.matched.begin(), c.matched.end(), k) != c.matched.end(); };
  expect("Two", has(Sdiam3Kind::Two), d == 2);
  if (n >= 4) expect("Three", has(Sdiam3Kind::Three), d == 3);
  expect("NMinus1", has(Sdiam3Kind::NMinus1), d == n - 1);

  const std::string cls = c.kind == Sdiam3Kind::Other ? "Other(" + d.to_string() + ")" : to_string(c.kind);
  if (as_json) {
    json j;
    j["graph6"] = to_graph6(g);
    j["class"] = c.kind == Sdiam3Kind::Other ? "Other" : to_string(c.kind);
    j["sdiam3"] = ext(d);
    json m = json::array();
    for (Sdiam3Kind k : c.matched) m.push_back(to_string(k));
    j["matched"] = m;
    j["spider"] = c.spider ? json::array({c.spider->a, c.spider->b, c.spider->c}) : json(nullptr);
    j["triangle_spider"] = c.triangle_spider
                               ? json::array({c.triangle_spider->p, c.triangle_spider->q, c.triangle_spider->r})
                               : json(nullptr);
    j["agree"] = mismatches.empty();
    j["mismatches"] = mismatches;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "graph6   " << to_graph6(g) << "\n";
    std::cout << "class    " << cls << "\n";
    std::cout << "sdiam3   " << d << " (computed)\n";
    std::cout << "matched ";
    if (c.matched.empty()) std::cout << " none";
    for (Sdiam3Kind k : c.matched) std::cout << " " << to_string(k);
    std::cout << "\n";
    if (c.spider) std::cout << "spider   T(" << c.spider->a << "," << c.spider->b << "," << c.spider->c << ")\n";
    if (c.triangle_spider) {
      std::cout << "triangle-spider (" << c.triangle_spider->p << "," << c.triangle_spider->q << ","
                << c.triangle_spider->r << ")\n";
    }
  }
  if (!mismatches.empty()) {
    std::cerr << "!!!!!!!! DISCREPANCY: recognizers disagree with the computed sdiam3 !!!!!!!!\n";
    for (const auto& m : mismatches) std::cerr << "  " << m << "\n";
    return violation;
  }
  return ok;
}

struct GenerateArgs {
  std::optional<int> path, cycle, complete, star, star_path, example2_complete;
  std::optional<std::string> complete_bipartite, double_star, spider, triangle_spider, triple_star, h2,
      example2_inner;
};

int cmd_generate(const GenerateArgs& a) {
  std::vector<FamilySpec> specs;
  if (a.path) specs.push_back(PathSpec{*a.path});
  if (a.cycle) specs.push_back(CycleSpec{*a.cycle});
  if (a.complete) specs.push_back(CompleteSpec{*a.complete});
  if (a.star) specs.push_back(StarSpec{*a.star});
  if (a.star_path) specs.push_back(StarPathSpec{*a.star_path});
  if (a.complete_bipartite) {
    const auto v = parse_ints(*a.complete_bipartite, 2, "--complete-bipartite");
    specs.push_back(CompleteBipartiteSpec{v[0], v[1]});
  }
  if (a.double_star) {
    const auto v = parse_ints(*a.double_star, 2, "--double-star");
    specs.push_back(DoubleStarSpec{v[0], v[1]});
  }
  if (a.spider) {
    const auto v = parse_ints(*a.spider, 3, "--spider");
    specs.push_back(SpiderSpec{v[0], v[1], v[2]});
  }
  if (a.triangle_spider) {
    const auto v = parse_ints(*a.triangle_spider, 3, "--triangle-spider");
    specs.push_back(TriangleSpiderSpec{v[0], v[1], v[2]});
  }
  if (a.triple_star) {
    const auto v = parse_ints(*a.triple_star, 3, "--triple-star");
    specs.push_back(TripleStarSpec{v[0], v[1], v[2]});
  }
  if (a.h2) {
    H2Spec h;
    if (!a.h2->empty()) {
      std::size_t start = 0;
      while (start <= a.h2->size()) {
        const std::size_t end = std::min(a.h2->find(',', start), a.h2->size());
        h.patterns.push_back(parse_h2_pattern(a.h2->substr(start, end - start)));
        start = end + 1;
      }
    }
    specs.push_back(h);
  }
  if (a.example2_complete) specs.push_back(Example2Spec{complete_graph(*a.example2_complete)});
  if (a.example2_inner) specs.push_back(Example2Spec{load_graph(*a.example2_inner)});
  if (specs.size() != 1) throw parameter_error("generate takes exactly one family flag");
  std::cout << to_graph6(generate(specs.front())) << "\n";
  return ok;
}

struct VerifyArgs {
  std::string claims = "all";
  std::string corpus;
  std::string out;
  unsigned threads = 0;
  std::uint64_t seed = 1;
  bool dedup = false;
  bool no_memo = false;
  std::size_t max_records = 1000;
};

int cmd_verify(const VerifyArgs& a, bool as_json) {
  const std::vector<ClaimId> claims = parse_claims(a.claims);
  const char* strict_env = std::getenv("GRAPH6_STRICT");
  const bool strict = !(strict_env && std::string(strict_env) == "0");
  CorpusSpec spec = parse_corpus(a.corpus, a.seed, strict);
  spec.dedup = a.dedup;
  RunOptions opts;
  opts.threads = a.threads;
  opts.memo = !a.no_memo;
  opts.max_records = a.max_records;
  opts.on_skip = [](std::size_t line, const std::string& msg) {
    std::cerr << "warning: skipped line " << line << ": " << msg << "\n";
  };
  const std::vector<RunReport> reports = run_suite(claims, spec, opts);
  if (!a.out.empty()) write_reports(reports, a.out);

  bool any = false;
  for (const RunReport& r : reports) any = any || !r.verified();
  if (as_json) {
    std::cout << to_json(reports).dump(2) << "\n";
  } else {
    std::printf("%-14s %10s %10s %10s %10s %8s %8s\n", "claim", "checked", "holds", "violated", "vacuous", "info",
                "flagged");
    for (const RunReport& r : reports) {
      std::printf("%-14s %10llu %10llu %10llu %10llu %8llu %8llu\n", r.claim_id.c_str(),
                  static_cast<unsigned long long>(r.graphs_checked), static_cast<unsigned long long>(r.holds),
                  static_cast<unsigned long long>(r.violated), static_cast<unsigned long long>(r.vacuous),
                  static_cast<unsigned long long>(r.informational), static_cast<unsigned long long>(r.flagged));
      for (const TheoremVerdict& v : r.violations) {
        std::printf("  VIOLATION %s %s\n", v.graph6.c_str(), v.detail.c_str());
      }
    }
    std::printf("corpus %s, %.2f s\n", reports.front().corpus.c_str(), reports.front().wall_time_s);
  }
  return any ? violation : ok;
}

int cmd_oracle_diff(const std::string& g6, int k, bool as_json) {
  const Graph g = load_graph(g6);
  const int n = g.order();
  if (n > oracle_max_order) throw capacity_error("oracle-diff supports n <= " + std::to_string(oracle_max_order));
  if (k < 1 || k > n) throw domain_error("k must be in [1, n]");
  SteinerSolver solver(g);
  std::size_t compared = 0;
  json diffs = json::array();
  std::string text;
  std::optional<ExtLength> lo, hi;
  for_each_subset_of_size(g.vertices(), k, [&](VertexSet s) {
    ++compared;
    const ExtLength dp = solver.distance(s);
    lo = lo ? std::min(*lo, dp) : dp;
    hi = hi ? std::max(*hi, dp) : dp;
    const ExtLength brute = steiner_distance_oracle(g, s);
    std::optional<ExtLength> med;
    if (k == 3) {
      const auto m = s.to_vector();
      med = solver.median_distance(m[0], m[1], m[2]);
    }
    if (dp != brute || (med && *med != dp)) {
      json d{{"terminals", s.to_vector()}, {"dp", ext(dp)}, {"oracle", ext(brute)}};
      if (med) d["median"] = ext(*med);
      diffs.push_back(d);
      text += "  " + s.to_string() + " dp=" + dp.to_string() + " oracle=" + brute.to_string() +
              (med ? " median=" + med->to_string() : "") + "\n";
    }
  });
  if (as_json) {
    json j{{"graph6", to_graph6(g)}, {"k", k}, {"compared", compared}, {"min", ext(*lo)}, {"max", ext(*hi)},
           {"discrepancies", diffs}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text << diffs.size() << " discrepancies in " << compared << " terminal sets";
    if (diffs.empty()) {
      std::cout << (*lo == *hi ? ", all agree at " + lo->to_string()
                               : ", values " + lo->to_string() + ".." + hi->to_string());
    }
    std::cout << "\n";
  }
  return diffs.empty() ? ok : violation;
}

int cmd_decode(const std::string& g6) {
  const Graph g = load_graph(g6);
  json j{{"n", g.order()}, {"m", g.size()}, {"edges", edges_json(g.edges())}, {"graph6", to_graph6(g)}};
  std::cout << j.dump(2) << "\n";
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Steiner distance and Steiner k-diameter toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit JSON on stdout");

  std::string g6;
  int k = 0;
  bool witness = false;
  auto* metrics = app.add_subcommand("metrics", "sdiam_k, srad_k and e_k of a graph (JSON)");
  metrics->add_option("graph", g6, "graph6 string or @file")->required();
  metrics->add_option("k", k, "terminal count, 2 <= k <= n")->required();
  metrics->add_flag("--witness", witness, "Include a realizing Steiner tree");

  auto* classify = app.add_subcommand("classify", "Structural class of sdiam_3, checked against computation");
  classify->add_option("graph", g6, "graph6 string or @file")->required();

  GenerateArgs gen;
  auto* generate_cmd = app.add_subcommand("generate", "Print the graph6 of a named family member");
  generate_cmd->add_option("--path", gen.path, "P_n");
  generate_cmd->add_option("--cycle", gen.cycle, "C_n");
  generate_cmd->add_option("--complete", gen.complete, "K_n");
  generate_cmd->add_option("--complete-bipartite", gen.complete_bipartite, "K_{s,t} as s,t");
  generate_cmd->add_option("--star", gen.star, "K_{1,leaves}");
  generate_cmd->add_option("--double-star", gen.double_star, "double star as s,t");
  generate_cmd->add_option("--spider", gen.spider, "T_{a,b,c} as a,b,c");
  generate_cmd->add_option("--triangle-spider", gen.triangle_spider, "triangle with legs p,q,r");
  generate_cmd->add_option("--triple-star", gen.triple_star, "triple star a,b,c");
  generate_cmd->add_option("--h2", gen.h2, "H2 attachment patterns, e.g. UVW,V,UW");
  generate_cmd->add_option("--star-path", gen.star_path, "star of order n-2 joined to a path of length 2");
  generate_cmd->add_option("--example2-inner-complete", gen.example2_complete, "Example2 with inner K_m");
  generate_cmd->add_option("--example2-inner", gen.example2_inner, "Example2 with an inner graph6 (or @file)");

  VerifyArgs ver;
  auto* verify = app.add_subcommand("verify", "Check claims over a corpus and write reports");
  verify->add_option("--claims", ver.claims, "comma-separated claim ids, or all")->capture_default_str();
  verify->add_option("--corpus", ver.corpus,
                     "labeled:N[:connected] | trees:N | file:PATH | random:N:COUNT[:connected|:both] | "
                     "families:N  (N may be a range A-B)")
      ->required();
  verify->add_option("--out", ver.out, "write PREFIX.json and PREFIX.csv");
  verify->add_option("--threads", ver.threads, "worker threads (0 = all cores)")->capture_default_str();
  verify->add_option("--seed", ver.seed, "seed for random corpora")->capture_default_str();
  verify->add_flag("--dedup", ver.dedup, "keep one graph per isomorphism class (n <= 8)");
  verify->add_flag("--no-memo", ver.no_memo, "re-evaluate every tree instead of once per class");
  verify->add_option("--max-records", ver.max_records, "records kept per list")->capture_default_str();

  auto* oracle = app.add_subcommand("oracle-diff", "Compare DP, oracle and median on every k-subset");
  oracle->add_option("graph", g6, "graph6 string or @file")->required();
  oracle->add_option("k", k, "subset size")->required();

  auto* decode = app.add_subcommand("decode", "Print the edge list of a graph6 string");
  decode->add_option("graph", g6, "graph6 string or @file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : parse;
  }

  try {
    if (*metrics) return cmd_metrics(g6, k, witness);
    if (*classify) return cmd_classify(g6, as_json);
    if (*generate_cmd) return cmd_generate(gen);
    if (*verify) return cmd_verify(ver, as_json);
    if (*oracle) return cmd_oracle_diff(g6, k, as_json);
    if (*decode) return cmd_decode(g6);
  } catch (const decode_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return parse;
  } catch (const parameter_error& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
    return parse;
  } catch (const config_error& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return parse;
  } catch (const domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return domain;
  } catch (const capacity_error& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return domain;
  } catch (const io_error& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return io;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return domain;
  }
  return ok;
}
