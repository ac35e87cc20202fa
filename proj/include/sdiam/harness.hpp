#pragma once

// Runs registered claims over a corpus and aggregates per-claim reports.
//
// Graphs are produced sequentially and evaluated in fixed-size batches, split
// across worker threads; results are folded back in production order, so the
// report does not depend on the thread count. Trees are memoized by canonical
// code: a class whose first member produced only clean outcomes is not
// re-evaluated (label-sensitive oracle claims are always re-run).

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <exception>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "sdiam/claims.hpp"
#include "sdiam/corpus.hpp"
#include "sdiam/errors.hpp"
#include "sdiam/graph6.hpp"
#include "sdiam/isomorphism.hpp"
#include "sdiam/pair_context.hpp"

namespace sdiam {

struct LabeledCorpus { int lo, hi; bool connected_only; };
struct TreesCorpus { int lo, hi; };
struct FileCorpus { std::string path; bool strict = true; };
struct RandomCorpus { int lo, hi; std::size_t count; std::uint64_t seed; RandomFilter filter; };
struct FamiliesCorpus { int lo, hi; };

struct CorpusSpec {
  std::variant<LabeledCorpus, TreesCorpus, FileCorpus, RandomCorpus, FamiliesCorpus> source;
  bool dedup = false;  // isomorphism dedup, n <= 8 only
};

inline constexpr int dedup_max_order = 8;

namespace detail {

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = s.find(sep, start);
    out.emplace_back(s.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
    if (end == std::string_view::npos) return out;
    start = end + 1;
  }
}

inline long long parse_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw config_error("invalid " + what + " '" + s + "'");
  return v;
}

// "N" or "A-B".
inline std::pair<int, int> parse_range(const std::string& s) {
  const auto dash = s.find('-');
  if (dash == std::string::npos) {
    const int n = static_cast<int>(parse_int(s, "order"));
    return {n, n};
  }
  const int lo = static_cast<int>(parse_int(s.substr(0, dash), "order"));
  const int hi = static_cast<int>(parse_int(s.substr(dash + 1), "order"));
  if (lo > hi) throw config_error("empty order range '" + s + "'");
  return {lo, hi};
}

inline std::string range_text(int lo, int hi) {
  return lo == hi ? std::to_string(lo) : std::to_string(lo) + "-" + std::to_string(hi);
}

}  // namespace detail

// labeled:N[:connected] | trees:N | file:PATH | random:N:COUNT[:connected|:both]
// | families:N, where N is an order or a range A-B.
inline CorpusSpec parse_corpus(std::string_view text, std::uint64_t seed = 1, bool strict = true) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw config_error("corpus must be kind:args, got '" + std::string(text) + "'");
  const std::string kind(text.substr(0, colon));
  const std::string rest(text.substr(colon + 1));
  CorpusSpec spec;
  if (kind == "file") {
    if (rest.empty()) throw config_error("file corpus needs a path");
    spec.source = FileCorpus{rest, strict};
    return spec;
  }
  const std::vector<std::string> parts = detail::split(rest, ':');
  const auto [lo, hi] = detail::parse_range(parts[0]);
  if (kind == "labeled") {
    if (parts.size() > 2 || (parts.size() == 2 && parts[1] != "connected")) {
      throw config_error("labeled corpus takes an optional ':connected' suffix only");
    }
    if (lo < 1 || hi > labeled_max_order) throw config_error("labeled corpus requires 1 <= n <= 8");
    spec.source = LabeledCorpus{lo, hi, parts.size() == 2};
  } else if (kind == "trees") {
    if (parts.size() != 1) throw config_error("trees corpus takes one order argument");
    if (lo < 2 || hi > trees_max_order) throw config_error("trees corpus requires 2 <= n <= 12");
    spec.source = TreesCorpus{lo, hi};
  } else if (kind == "random") {
    if (parts.size() < 2 || parts.size() > 3) throw config_error("random corpus is random:N:COUNT[:connected|:both]");
    const long long count = detail::parse_int(parts[1], "sample count");
    if (count < 0) throw config_error("sample count must be non-negative");
    RandomFilter f = RandomFilter::None;
    if (parts.size() == 3) {
      if (parts[2] == "connected") f = RandomFilter::Connected;
      else if (parts[2] == "both") f = RandomFilter::BothConnected;
      else throw config_error("random filter must be 'connected' or 'both'");
    }
    if (lo < 1 || hi > Graph::max_order) throw config_error("random corpus requires 1 <= n <= 64");
    spec.source = RandomCorpus{lo, hi, static_cast<std::size_t>(count), seed, f};
  } else if (kind == "families") {
    if (parts.size() != 1) throw config_error("families corpus takes one order argument");
    if (lo < 1 || hi > Graph::max_order) throw config_error("families corpus requires 1 <= n <= 64");
    spec.source = FamiliesCorpus{lo, hi};
  } else {
    throw config_error("unknown corpus kind '" + kind + "'");
  }
  return spec;
}

inline std::string describe(const CorpusSpec& spec) {
  std::string out = std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, LabeledCorpus>) {
          return "labeled:" + detail::range_text(s.lo, s.hi) + (s.connected_only ? ":connected" : "");
        } else if constexpr (std::is_same_v<T, TreesCorpus>) {
          return "trees:" + detail::range_text(s.lo, s.hi);
        } else if constexpr (std::is_same_v<T, FileCorpus>) {
          return "file:" + s.path;
        } else if constexpr (std::is_same_v<T, RandomCorpus>) {
          const char* f = s.filter == RandomFilter::Connected ? ":connected"
                          : s.filter == RandomFilter::BothConnected ? ":both" : "";
          return "random:" + detail::range_text(s.lo, s.hi) + ":" + std::to_string(s.count) + f +
                 " seed=" + std::to_string(s.seed);
        } else {
          return "families:" + detail::range_text(s.lo, s.hi);
        }
      },
      spec.source);
  return spec.dedup ? out + " dedup" : out;
}

namespace detail {

// Seeds differ per order so a range is the union of the single-order corpora.
inline std::uint64_t order_seed(std::uint64_t seed, int n) {
  return seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(n);
}

template <typename Fn, typename Skip>
void for_each_raw(const CorpusSpec& spec, Fn&& fn, Skip&& on_skip) {
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, LabeledCorpus>) {
          for (int n = s.lo; n <= s.hi; ++n) for_each_labeled(n, s.connected_only, fn);
        } else if constexpr (std::is_same_v<T, TreesCorpus>) {
          for (int n = s.lo; n <= s.hi; ++n) for_each_tree(n, fn);
        } else if constexpr (std::is_same_v<T, FileCorpus>) {
          ingest_graph6_file(s.path, s.strict, [&](const Graph& g, std::size_t) { fn(g); }, on_skip);
        } else if constexpr (std::is_same_v<T, RandomCorpus>) {
          for (int n = s.lo; n <= s.hi; ++n) for_each_random(n, s.count, order_seed(s.seed, n), s.filter, fn);
        } else {
          for (const Graph& g : named_families(s.lo, s.hi)) fn(g);
        }
      },
      spec.source);
}

// Keeps the first graph of each isomorphism class.
class Deduper {
 public:
  bool first_of_class(const Graph& g) {
    if (g.order() > dedup_max_order) throw config_error("dedup supports n <= 8 only");
    std::vector<std::vector<int>> sig = vertex_signatures(g);
    std::sort(sig.begin(), sig.end());
    std::vector<int> key{g.order(), g.size()};
    for (const auto& s : sig) {
      key.push_back(-1);
      key.insert(key.end(), s.begin(), s.end());
    }
    auto& bucket = buckets_[key];
    for (const Graph& h : bucket)
      if (is_isomorphic(g, h)) return false;
    bucket.push_back(g);
    return true;
  }

 private:
  std::map<std::vector<int>, std::vector<Graph>> buckets_;
};

}  // namespace detail

// Streams the corpus, applying dedup when requested. on_skip(line, message)
// receives lenient-mode graph6 errors.
template <typename Fn, typename Skip>
void for_each_corpus_graph(const CorpusSpec& spec, Fn&& fn, Skip&& on_skip) {
  if (!spec.dedup) {
    detail::for_each_raw(spec, fn, on_skip);
    return;
  }
  detail::Deduper d;
  detail::for_each_raw(spec, [&](const Graph& g) {
    if (d.first_of_class(g)) fn(g);
  }, on_skip);
}

template <typename Fn>
void for_each_corpus_graph(const CorpusSpec& spec, Fn&& fn) {
  for_each_corpus_graph(spec, fn, [](std::size_t, const std::string&) {});
}

struct RunReport {
  std::string claim_id;
  std::string corpus;
  std::uint64_t graphs_checked = 0;
  std::uint64_t holds = 0;
  std::uint64_t violated = 0;
  std::uint64_t vacuous = 0;
  std::uint64_t informational = 0;  // mismatches on graphs below the claim's stated order
  std::uint64_t flagged = 0;        // verdicts carrying discrepancy flags
  std::vector<TheoremVerdict> violations;
  std::vector<TheoremVerdict> informational_records;
  std::vector<TheoremVerdict> discrepancies;
  std::uint64_t skipped_lines = 0;
  double wall_time_s = 0;  // whole run; claims share per-graph work

  bool verified() const noexcept { return violated == 0; }
};

struct RunOptions {
  unsigned threads = 0;  // 0: hardware concurrency
  bool memo = true;
  std::size_t max_records = 1000;  // per list; counts stay exact
  std::size_t batch = 2048;
  std::function<void(std::size_t, const std::string&)> on_skip;
};

namespace detail {

enum class Outcome : std::uint8_t { Holds, Vacuous, Violated, Informational };

struct Slot {
  Outcome outcome = Outcome::Holds;
  std::optional<TheoremVerdict> record;
};

inline Outcome classify(const TheoremVerdict& v) {
  switch (v.status) {
    case VerdictStatus::Holds: return Outcome::Holds;
    case VerdictStatus::Vacuous: return Outcome::Vacuous;
    case VerdictStatus::Violated: return v.in_range ? Outcome::Violated : Outcome::Informational;
  }
  return Outcome::Violated;
}

using Memo = std::unordered_map<std::uint64_t, std::vector<Outcome>>;

inline void evaluate_graph(const Graph& g, const std::vector<ClaimId>& claims, bool use_memo, Memo& memo,
                           Slot* out) {
  std::optional<std::uint64_t> key;
  if (use_memo && g.order() <= 16 && is_tree(g)) key = tree_code_unchecked(g);
  const std::vector<Outcome>* hit = nullptr;
  if (key) {
    auto it = memo.find(*key);
    if (it != memo.end()) hit = &it->second;
  }
  std::optional<PairContext> ctx;
  bool clean = true;
  for (std::size_t i = 0; i < claims.size(); ++i) {
    if (hit && !claim_is_label_sensitive(claims[i])) {
      out[i] = Slot{(*hit)[i], std::nullopt};
      continue;
    }
    if (!ctx) ctx.emplace(g);
    TheoremVerdict v = evaluate_claim(claims[i], *ctx);
    const Outcome o = classify(v);
    const bool keep = (o == Outcome::Violated || o == Outcome::Informational || !v.flags.empty());
    if (keep && !claim_is_label_sensitive(claims[i])) clean = false;
    out[i] = Slot{o, keep ? std::optional<TheoremVerdict>(std::move(v)) : std::nullopt};
  }
  if (key && !hit && clean) {
    std::vector<Outcome> outcomes(claims.size());
    for (std::size_t i = 0; i < claims.size(); ++i) outcomes[i] = out[i].outcome;
    memo.emplace(*key, std::move(outcomes));
  }
}

inline bool record_less(const TheoremVerdict& a, const TheoremVerdict& b) {
  if (a.graph6.size() != b.graph6.size()) return a.graph6.size() < b.graph6.size();
  if (a.graph6 != b.graph6) return a.graph6 < b.graph6;
  return a.detail < b.detail;
}

}  // namespace detail

inline std::vector<RunReport> run_suite(const std::vector<ClaimId>& claims, const CorpusSpec& corpus,
                                        const RunOptions& opts = {}) {
  if (claims.empty()) throw config_error("no claims requested");
  const auto start = std::chrono::steady_clock::now();
  const std::string corpus_text = describe(corpus);
  std::vector<RunReport> reports(claims.size());
  for (std::size_t i = 0; i < claims.size(); ++i) {
    reports[i].claim_id = to_string(claims[i]);
    reports[i].corpus = corpus_text;
  }

  unsigned threads = opts.threads ? opts.threads : std::max(1U, std::thread::hardware_concurrency());
  const std::size_t batch_size = std::max<std::size_t>(opts.batch, 1);
  std::vector<detail::Memo> memos(threads);
  std::vector<Graph> batch;
  batch.reserve(batch_size);
  std::vector<detail::Slot> slots;

  auto absorb = [&](std::size_t c, detail::Slot& s) {
    RunReport& r = reports[c];
    ++r.graphs_checked;
    switch (s.outcome) {
      case detail::Outcome::Holds: ++r.holds; break;
      case detail::Outcome::Vacuous: ++r.vacuous; break;
      case detail::Outcome::Violated: ++r.violated; break;
      case detail::Outcome::Informational: ++r.informational; break;
    }
    if (!s.record) return;
    if (!s.record->flags.empty()) {
      ++r.flagged;
      if (r.discrepancies.size() < opts.max_records) r.discrepancies.push_back(*s.record);
    }
    if (s.outcome == detail::Outcome::Violated && r.violations.size() < opts.max_records) {
      r.violations.push_back(std::move(*s.record));
    } else if (s.outcome == detail::Outcome::Informational && r.informational_records.size() < opts.max_records) {
      r.informational_records.push_back(std::move(*s.record));
    }
  };

  auto flush = [&] {
    const std::size_t m = batch.size();
    const std::size_t c = claims.size();
    slots.assign(m * c, detail::Slot{});
    const unsigned used = static_cast<unsigned>(std::min<std::size_t>(threads, m));
    auto work = [&](unsigned t) {
      const std::size_t lo = m * t / used, hi = m * (t + 1) / used;
      for (std::size_t i = lo; i < hi; ++i) detail::evaluate_graph(batch[i], claims, opts.memo, memos[t], &slots[i * c]);
    };
    if (used <= 1) {
      work(0);
    } else {
      std::vector<std::exception_ptr> errors(used);
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < used; ++t) {
        pool.emplace_back([&, t] {
          try {
            work(t);
          } catch (...) {
            errors[t] = std::current_exception();
          }
        });
      }
      for (auto& th : pool) th.join();
      for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    }
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t k = 0; k < c; ++k) absorb(k, slots[i * c + k]);
    batch.clear();
  };

  std::uint64_t skipped = 0;
  for_each_corpus_graph(
      corpus,
      [&](const Graph& g) {
        batch.push_back(g);
        if (batch.size() == batch_size) flush();
      },
      [&](std::size_t line, const std::string& msg) {
        ++skipped;
        if (opts.on_skip) opts.on_skip(line, msg);
      });
  flush();

  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  for (RunReport& r : reports) {
    std::sort(r.violations.begin(), r.violations.end(), detail::record_less);
    std::sort(r.informational_records.begin(), r.informational_records.end(), detail::record_less);
    std::sort(r.discrepancies.begin(), r.discrepancies.end(), detail::record_less);
    r.skipped_lines = skipped;
    r.wall_time_s = secs;
  }
  return reports;
}

inline nlohmann::ordered_json to_json(const TheoremVerdict& v) {
  nlohmann::ordered_json j;
  j["claim_id"] = v.claim_id;
  j["graph6"] = v.graph6;
  j["status"] = to_string(v.status);
  j["in_range"] = v.in_range;
  j["detail"] = v.detail;
  j["flags"] = v.flags;
  return j;
}

inline nlohmann::ordered_json to_json(const RunReport& r, bool include_time = true) {
  nlohmann::ordered_json j;
  j["claim_id"] = r.claim_id;
  j["corpus"] = r.corpus;
  j["graphs_checked"] = r.graphs_checked;
  j["holds"] = r.holds;
  j["violated"] = r.violated;
  j["vacuous"] = r.vacuous;
  j["informational"] = r.informational;
  j["flagged"] = r.flagged;
  j["skipped_lines"] = r.skipped_lines;
  auto list = [](const std::vector<TheoremVerdict>& vs) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (const auto& v : vs) a.push_back(to_json(v));
    return a;
  };
  j["violations"] = list(r.violations);
  j["informational_records"] = list(r.informational_records);
  j["discrepancies"] = list(r.discrepancies);
  if (include_time) j["wall_time_s"] = r.wall_time_s;
  return j;
}

inline nlohmann::ordered_json to_json(const std::vector<RunReport>& reports, bool include_time = true) {
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (const RunReport& r : reports) a.push_back(to_json(r, include_time));
  return a;
}

inline std::string csv_summary(const std::vector<RunReport>& reports) {
  auto quote = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
  };
  std::string out = "claim_id,corpus,checked,violations,vacuous\n";
  for (const RunReport& r : reports) {
    out += quote(r.claim_id) + "," + quote(r.corpus) + "," + std::to_string(r.graphs_checked) + "," +
           std::to_string(r.violated) + "," + std::to_string(r.vacuous) + "\n";
  }
  return out;
}

// Writes PREFIX.json and PREFIX.csv.
inline void write_reports(const std::vector<RunReport>& reports, const std::string& prefix) {
  auto put = [](const std::string& path, const std::string& body) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw io_error("cannot open " + path + " for writing");
    f << body;
    f.flush();
    if (!f) throw io_error("write failure on " + path);
  };
  put(prefix + ".json", to_json(reports).dump(2) + "\n");
  put(prefix + ".csv", csv_summary(reports));
}

}  // namespace sdiam
