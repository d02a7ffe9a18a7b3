// altperm: counts, tables, property suites, conjecture sweeps and traces.
//
// Exit codes: 0 success, 1 budget exceeded or a failed check, 2 bad input.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>

#include "altperm/cache.hpp"
#include "altperm/enumerate.hpp"
#include "altperm/equivalence.hpp"
#include "altperm/jf_bijection.hpp"
#include "altperm/suites.hpp"
#include "altperm/tables.hpp"
#include "altperm/young.hpp"

using namespace altperm;

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kBadInput = 2;

struct Global {
  std::string cache_dir;
  bool no_cache = false;
  std::unique_ptr<CountCache> cache;

  CountCache* open() {
    if (no_cache) return nullptr;
    if (!cache) {
      cache = std::make_unique<CountCache>(
          cache_dir.empty() ? CountCache::default_dir()
                            : std::filesystem::path(cache_dir));
    }
    return cache.get();
  }
};

double ms(std::chrono::nanoseconds d) {
  return std::chrono::duration<double, std::milli>(d).count();
}

std::string group_text(const std::vector<std::string>& g) {
  if (g.size() == 1) return g[0];
  std::string s = "(";
  for (std::size_t i = 0; i < g.size(); ++i) s += (i ? " " : "") + g[i];
  return s + ")";
}

AvoidanceQuery query_from_key(const std::string& key) {
  const auto a = key.find('|');
  const auto b = key.rfind('|');
  if (a == std::string::npos || a == b) {
    throw std::invalid_argument("malformed cache key " + key);
  }
  return {Permutation::parse(key.substr(0, a)),
          PermClass::parse(key.substr(a + 1, b - a - 1)),
          std::stoi(key.substr(b + 1))};
}

// --- count ---------------------------------------------------------------

struct CountArgs {
  std::string pattern;
  std::string cls = "alt";
  int n = 0;
  int max_n = 13;
  bool json = false;
  bool verify = false;
};

int cmd_count(Global& g, const CountArgs& a) {
  const AvoidanceQuery q{Permutation::parse(a.pattern), PermClass::parse(a.cls),
                         a.n};
  if (a.n < 0) throw std::invalid_argument("n must be >= 0");
  if (a.n > a.max_n) {
    std::cerr << "budget exceeded: n=" << a.n << " > --max-n " << a.max_n
              << "\n";
    return kFail;
  }
  const auto r = count_avoiders(q, g.open());
  if (a.verify && r.cached) {
    const auto fresh = count_avoiders_parallel(q.pattern, q.cls, q.n);
    if (fresh != r.count) {
      std::cerr << "cache mismatch for " << q.key() << ": cached " << r.count
                << ", recomputed " << fresh << "\n";
      return kFail;
    }
  }
  if (a.json) {
    nlohmann::ordered_json j;
    j["query"] = q.key();
    j["count"] = r.count;
    j["elapsed_ms"] = ms(r.elapsed);
    j["cached"] = r.cached;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << r.count << "\n";
  }
  return kOk;
}

// --- tables --------------------------------------------------------------

struct TablesArgs {
  std::string which;
  int max_n = 0;  // 0: per-table default
  bool check = false;
};

int default_max_n(const ReferenceTable& t) {
  if (t.name == "6even") return 10;
  return 9;
}

int cmd_tables(Global& g, const TablesArgs& a) {
  const auto* t = find_table(a.which);
  if (!t) throw std::invalid_argument("unknown table " + a.which);
  const int max_n = a.max_n > 0 ? a.max_n : default_max_n(*t);
  const auto rep = reproduce_table(*t, max_n, g.open());
  std::cout << "patterns";
  for (int n : t->lengths) {
    if (n <= max_n) std::cout << "," << n;
  }
  std::cout << "\n";
  for (std::size_t i = 0; i < t->rows.size(); ++i) {
    std::string label;
    for (const auto& grp : t->rows[i].groups) {
      label += (label.empty() ? "" : " ") + group_text(grp);
    }
    std::cout << label;
    for (std::size_t j = 0; j < t->lengths.size(); ++j) {
      if (t->lengths[j] > max_n) continue;
      std::cout << "," << *rep.computed[i][j];
    }
    std::cout << "\n";
  }
  if (a.check) {
    std::cerr << "compared " << rep.compared << " cells, " << rep.mismatches
              << " mismatches\n";
    for (std::size_t i = 0; i < t->rows.size(); ++i) {
      for (std::size_t j = 0; j < t->lengths.size(); ++j) {
        const auto& want = t->rows[i].values[j];
        const auto& got = rep.computed[i][j];
        if (want && got && *want != *got) {
          std::string label;
          for (const auto& grp : t->rows[i].groups)
            label += (label.empty() ? "" : " ") + group_text(grp);
          std::cerr << "row " << i + 1 << " (" << label << ") n=" << t->lengths[j] << ": printed "
                    << *want << ", computed " << *got << "\n";
        }
      }
    }
    for (const auto& sp : rep.splits) {
      std::cerr << "row " << sp.row + 1 << " n=" << sp.n << ": "
                << sp.pattern.to_string() << " counts " << sp.count
                << ", unlike the rest of its row\n";
    }
    if (rep.mismatches) return kFail;
  }
  return kOk;
}

// --- verify --------------------------------------------------------------

struct VerifyArgs {
  std::string suite;
  SuiteOptions opts;
};

int cmd_verify(const VerifyArgs& a) {
  const auto names = suite_names();
  if (std::find(names.begin(), names.end(), a.suite) == names.end()) {
    throw std::invalid_argument("unknown suite " + a.suite);
  }
  bool ok = true;
  for (const auto& r : run_suite(a.suite, a.opts)) {
    std::cout << format_result(r) << "\n";
    ok = ok && r.passed;
  }
  return ok ? kOk : kFail;
}

// --- cache-verify --------------------------------------------------------

struct CacheVerifyArgs {
  int sample = 50;
  unsigned seed = 1;
};

int cmd_cache_verify(Global& g, const CacheVerifyArgs& a) {
  auto* cache = g.open();
  if (!cache) throw std::invalid_argument("cache disabled");
  std::vector<CacheEntry> all;
  for (const auto& [k, e] : cache->entries()) all.push_back(e);
  std::mt19937 rng(a.seed);
  std::shuffle(all.begin(), all.end(), rng);
  if (static_cast<int>(all.size()) > a.sample) all.resize(a.sample);
  int bad = 0;
  for (const auto& e : all) {
    const auto q = query_from_key(e.key);
    const auto fresh = count_avoiders_parallel(q.pattern, q.cls, q.n);
    const bool ok = fresh == e.count;
    bad += !ok;
    std::cout << (ok ? "ok  " : "BAD ") << e.key << " " << e.count;
    if (!ok) std::cout << " recomputed " << fresh;
    std::cout << "\n";
  }
  std::cout << all.size() << " checked, " << bad << " mismatches\n";
  return bad ? kFail : kOk;
}

// --- conjecture ----------------------------------------------------------

struct ConjectureArgs {
  std::string id;
  int k = 0;
  int k_min = 0;
  int rows = 6;
  int n = 9;
  int length = 4;
  long budget_ms = 0;
};

int cmd_conjecture(Global& g, const ConjectureArgs& a) {
  ConjectureRanges r;
  if (a.k > 0) r.k_min = r.k_max = a.k;
  if (a.k_min > 0) r.k_min = a.k_min;
  r.rows = a.rows;
  r.n_max = a.n;
  r.length = a.length;
  r.budget = std::chrono::milliseconds(a.budget_ms);
  const auto v = check_conjecture(a.id, r, g.open());
  std::cout << v.id << ": " << v.status_text() << " (covered " << v.covered
            << ", " << v.cases << " cases)\n";
  return v.status == ConjectureVerdict::Status::BudgetExceeded ? kFail : kOk;
}

// --- classify ------------------------------------------------------------

struct ClassifyArgs {
  std::vector<std::string> patterns;
  int length = 0;
  std::string cls = "alt";
  std::string parity = "all";
  int n_min = 1;
  int n_max = 9;
};

int cmd_classify(Global& g, const ClassifyArgs& a) {
  std::vector<Permutation> ps;
  for (const auto& s : a.patterns) ps.push_back(Permutation::parse(s));
  if (a.length > 0) {
    for_each_member(PermClass::all(), a.length,
                    [&](const Permutation& p) { ps.push_back(p); });
  }
  if (ps.empty()) throw std::invalid_argument("no patterns given");
  std::vector<int> lengths;
  if (a.parity == "odd") {
    lengths = lengths_of_parity(Parity::Odd, a.n_min, a.n_max);
  } else if (a.parity == "even") {
    lengths = lengths_of_parity(Parity::Even, a.n_min, a.n_max);
  } else {
    for (int n = a.n_min; n <= a.n_max; ++n) lengths.push_back(n);
  }
  const auto rep = classify(ps, PermClass::parse(a.cls), lengths, g.open());
  for (const auto& b : rep.blocks) {
    std::cout << rep.describe(b) << "  [";
    for (std::size_t i = 0; i < b.sequence.size(); ++i) {
      std::cout << (i ? "," : "") << b.sequence[i];
    }
    std::cout << "]\n";
  }
  std::cout << "candidate equivalences: " << rep.candidate_equivalences()
            << "\n";
  return kOk;
}

// --- trace ---------------------------------------------------------------

struct TraceArgs {
  std::string diagram;
  std::string transversal;
  bool psi = false;
};

int cmd_trace(const TraceArgs& a) {
  const auto y = ADYoungDiagram::parse(a.diagram);
  if (!y.well_formed()) throw std::invalid_argument("not an AD-Young diagram");
  if (!is_x_alternating(y, 1)) {
    throw std::invalid_argument("diagram is not 1-alternating");
  }
  const auto t = Permutation::parse(a.transversal);
  if (!is_valid_transversal(y, t)) {
    throw std::invalid_argument("not a valid transversal of the diagram");
  }
  const auto& avoid = a.psi ? Permutation::parse("321") : Permutation::parse("213");
  if (transversal_contains(y.shape, t, avoid)) {
    throw std::invalid_argument(std::string("transversal must avoid ") +
                                (a.psi ? "J3" : "F3"));
  }
  std::vector<TraceStep> trace;
  const auto out = a.psi ? Psi(y, t, &trace) : Phi(y, t, &trace);
  for (const auto& s : trace) std::cout << format_trace_step(s) << "\n";
  std::cout << "steps " << trace.size() << "\n";
  std::cout << "result " << out.to_string() << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pattern avoidance counts for alternating and descent-type "
               "permutations"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--cache-dir", g.cache_dir,
                 "cache directory (default $ALTPERM_CACHE or ./.altperm-cache)");
  app.add_flag("--no-cache", g.no_cache, "neither read nor write the cache");

  CountArgs ca;
  auto* count = app.add_subcommand("count", "count avoiders of one pattern");
  count->add_option("--pattern", ca.pattern, "pattern, e.g. 2134")->required();
  count->add_option("--class", ca.cls, "all|alt|ralt|dk:K|dset:..|aset:..");
  count->add_option("--n", ca.n, "length")->required();
  count->add_option("--max-n", ca.max_n, "largest n allowed (budget)");
  count->add_flag("--json", ca.json, "JSON output");
  count->add_flag("--verify", ca.verify, "recompute cached results");

  TablesArgs ta;
  auto* tables = app.add_subcommand("tables", "recompute a reference table as CSV");
  tables->add_option("which", ta.which, "6even|6odd|4rep")->required();
  tables->add_option("--max-n", ta.max_n, "largest column length");
  tables->add_flag("--check", ta.check, "compare with the printed values");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run a property suite");
  verify->add_option("suite", va.suite,
                     "bijection|extension|doubling|injections|shape2")
      ->required();
  verify->add_option("--rows", va.opts.rows, "diagram rows");
  verify->add_option("--k", va.opts.k, "pattern length / k bound");
  verify->add_option("--n", va.opts.n_max, "largest n (injections)");

  CacheVerifyArgs cva;
  auto* cache_verify =
      app.add_subcommand("cache-verify", "recompute random cached entries");
  cache_verify->add_option("--sample", cva.sample, "entries to recompute");
  cache_verify->add_option("--seed", cva.seed, "shuffle seed");

  ConjectureArgs ja;
  auto* conj = app.add_subcommand("conjecture", "sweep an open conjecture");
  conj->add_option("id", ja.id, "sesa|decreasing|dk-2134|dk-1243|dk-isolated")
      ->required();
  conj->add_option("--k", ja.k, "k (sets both ends of the range)");
  conj->add_option("--k-min", ja.k_min, "lower end of the k range");
  conj->add_option("--rows", ja.rows, "diagram rows (sesa)");
  conj->add_option("--n", ja.n, "largest n");
  conj->add_option("--length", ja.length, "pattern length (dk-2134, dk-1243)");
  conj->add_option("--budget-ms", ja.budget_ms, "time budget, 0 = none");

  ClassifyArgs cl;
  auto* classify_cmd = app.add_subcommand("classify", "group patterns by counts");
  classify_cmd->add_option("--patterns", cl.patterns, "patterns")->delimiter(',');
  classify_cmd->add_option("--length", cl.length, "all patterns of this length");
  classify_cmd->add_option("--class", cl.cls, "permutation class");
  classify_cmd->add_option("--parity", cl.parity, "all|odd|even")
      ->check(CLI::IsMember({"all", "odd", "even"}));
  classify_cmd->add_option("--n-min", cl.n_min, "smallest n");
  classify_cmd->add_option("--n-max", cl.n_max, "largest n");

  TraceArgs tr;
  auto* trace = app.add_subcommand("trace", "print each phi (or psi) step");
  trace->add_option("--diagram", tr.diagram, "e.g. \"3,3,3;A=1;D=2\"")
      ->required();
  trace->add_option("--transversal", tr.transversal, "1-based, e.g. 132")
      ->required();
  trace->add_flag("--psi", tr.psi, "run Psi on a J3-avoiding transversal");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*count) return cmd_count(g, ca);
    if (*tables) return cmd_tables(g, ta);
    if (*verify) return cmd_verify(va);
    if (*cache_verify) return cmd_cache_verify(g, cva);
    if (*conj) return cmd_conjecture(g, ja);
    if (*classify_cmd) return cmd_classify(g, cl);
    if (*trace) return cmd_trace(tr);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}
