// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.
// ALTPERM_EXTENDED=1 adds the long table columns (6even n=12, 6odd n=11).

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "altperm/enumerate.hpp"
#include "altperm/equivalence.hpp"
#include "altperm/permutation.hpp"
#include "altperm/suites.hpp"
#include "altperm/tables.hpp"
#include "oracles.hpp"

using namespace altperm;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  void fail(const std::string& why) {
    pass = false;
    notes.push_back(why);
  }
  void note(const std::string& s) { notes.push_back(s); }
};

bool extended() {
  const char* e = std::getenv("ALTPERM_EXTENDED");
  return e && *e && std::string(e) != "0";
}

Permutation P(const char* s) { return Permutation::parse(s); }

int failures = 0;

void criterion(const std::string& id, const std::string& title, double limit_s,
               const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs =
      std::chrono::duration<double>(Clock::now() - t0).count();
  if (limit_s > 0 && secs > limit_s) {
    std::ostringstream s;
    s << "over time budget of " << limit_s << " s";
    o.fail(s.str());
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f s", secs);
  std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << id << "  "
            << title << "  [" << buf << "]\n";
  for (const auto& n : o.notes) std::cout << "      " << n << "\n";
  std::cout.flush();
  if (!o.pass) ++failures;
}

void table_cells(Outcome& o, const ReferenceTable& t, int max_n) {
  const auto rep = reproduce_table(t, max_n);
  std::ostringstream s;
  s << t.name << " n<=" << max_n << ": " << rep.compared
    << " printed cells compared, " << rep.mismatches << " off";
  o.note(s.str());
  if (rep.compared == 0) o.fail("nothing compared");
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    for (std::size_t j = 0; j < t.lengths.size(); ++j) {
      const auto& want = t.rows[i].values[j];
      const auto& got = rep.computed[i][j];
      if (want && got && *want != *got) {
        std::ostringstream m;
        m << "row " << i + 1 << " (" << t.rows[i].patterns().front().to_string()
          << ") n=" << t.lengths[j] << ": printed " << *want << ", counted "
          << *got;
        o.fail(m.str());
      }
    }
  }
  for (const auto& sp : rep.splits) {
    std::ostringstream m;
    m << "row " << sp.row + 1 << " n=" << sp.n << ": "
      << t.rows[sp.row].patterns().front().to_string() << " counts "
      << *rep.computed[sp.row][static_cast<std::size_t>(
             std::find(t.lengths.begin(), t.lengths.end(), sp.n) -
             t.lengths.begin())]
      << " but " << sp.pattern.to_string() << " counts " << sp.count;
    o.fail(m.str());
  }
}

void suite_results(Outcome& o, const std::vector<InvariantResult>& rs,
                   const std::function<bool(const InvariantResult&)>& pick) {
  for (const auto& r : rs) {
    if (!pick(r)) continue;
    o.note(format_result(r));
    if (!r.passed) o.fail(r.name);
    if (r.checked == 0) o.fail(r.name + " never exercised");
  }
}

bool is_lemma(const InvariantResult& r) { return r.name.rfind("lemma ", 0) == 0; }

std::vector<std::uint64_t> alt_seq(const Permutation& p) {
  return sequence(p, PermClass::alternating(), 10);
}

const EquivalenceBlock* block_of(const EquivalenceReport& r, const Permutation& p) {
  for (const auto& b : r.blocks) {
    if (std::find(b.patterns.begin(), b.patterns.end(), p) != b.patterns.end())
      return &b;
  }
  return nullptr;
}

void chain_in_block(Outcome& o, const EquivalenceReport& r,
                    std::initializer_list<const char*> chain,
                    const std::string& label) {
  const auto* b = block_of(r, P(*chain.begin()));
  for (const char* s : chain) {
    if (block_of(r, P(s)) != b) {
      o.fail(label + ": " + s + " separates from " + *chain.begin());
      return;
    }
  }
  o.note(label + ": " + r.describe(*b));
}

}  // namespace

int main() {
  std::cout << "acceptance run" << (extended() ? " (extended)" : "") << "\n";

  criterion("1", "4rep table, 45 cells", 5, [](Outcome& o) {
    table_cells(o, table_4rep(), 9);
  });

  criterion("2", "6even table, n<=10", 600, [](Outcome& o) {
    table_cells(o, table_6even(), 10);
  });
  if (extended()) {
    criterion("2x", "6even table, n<=12 (extended)", 7200, [](Outcome& o) {
      table_cells(o, table_6even(), 12);
    });
  }

  criterion("3", "6odd table, n<=9", 0, [](Outcome& o) {
    table_cells(o, table_6odd(), 9);
  });
  if (extended()) {
    criterion("3x", "6odd table, n<=11 (extended)", 7200, [](Outcome& o) {
      table_cells(o, table_6odd(), 11);
    });
  }

  // Shared by 4 and 5.
  std::vector<InvariantResult> bij;
  criterion("4", "Phi/Psi bijection, rows<=6 (semialternating included)", 600,
            [&](Outcome& o) {
              SuiteOptions opt;
              opt.rows = 6;
              bij = run_suite("bijection", opt);
              suite_results(o, bij, [](const auto& r) { return !is_lemma(r); });
            });

  criterion("5", "lemma checks along the bijection sweep", 0, [&](Outcome& o) {
    if (bij.empty()) o.fail("bijection sweep did not run");
    suite_results(o, bij, is_lemma);
  });

  criterion("6", "shape2 closed form, rows<=6", 60, [](Outcome& o) {
    SuiteOptions opt;
    opt.rows = 6;
    suite_results(o, run_suite("shape2", opt), [](const auto&) { return true; });
  });

  criterion("7", "extension identities, parents rows<=5", 0, [](Outcome& o) {
    SuiteOptions opt;
    opt.rows = 5;
    suite_results(o, run_suite("extension", opt), [](const auto&) { return true; });
  });

  criterion("8", "shortest alternating containers, k<=6", 120, [](Outcome& o) {
    SuiteOptions opt;
    opt.k = 6;
    suite_results(o, run_suite("doubling", opt), [](const auto&) { return true; });
    std::uint64_t n = 0;
    for (int k = 1; k <= 6; ++k) {
      for (const auto& p : oracle::all_perms(k)) {
        const int want = k + doubling(p).doubling_number;
        if (oracle::min_alternating_container_length(p) != want) {
          o.fail("container length for " + p.to_string());
          return;
        }
        const auto w = shortest_alternating_container(p);
        if (w.size() != want || !oracle::is_alternating(w) ||
            !oracle::naive_contains(w, p)) {
          o.fail("construction for " + p.to_string());
          return;
        }
        ++n;
      }
    }
    o.note("independent container search agrees on " + std::to_string(n) +
           " patterns");
  });

  criterion("9", "injections, k in 2..4, n<=8", 0, [](Outcome& o) {
    SuiteOptions opt;
    opt.k = 4;
    opt.n_max = 8;
    suite_results(o, run_suite("injections", opt), [](const auto&) { return true; });
  });

  criterion("10", "equivalence sweeps", 0, [](Outcome& o) {
    const auto alt = PermClass::alternating();
    const auto ralt = PermClass::reverse_alternating();
    int pairs = 0;
    for (int len = 1; len <= 2; ++len) {
      for (const auto& q : oracle::all_perms(len)) {
        const auto a = Permutation::identity(2).direct_sum(q);
        const auto b = Permutation::decreasing(2).direct_sum(q);
        if (alt_seq(a) != alt_seq(b)) o.fail("12q/21q at q=" + q.to_string());
        const auto p123 = Permutation::identity(3).direct_sum(q);
        const auto p213 = P("213").direct_sum(q);
        const auto p321 = Permutation::decreasing(3).direct_sum(q);
        const auto s = alt_seq(p213);
        if (alt_seq(p123) != s || alt_seq(p321) != s)
          o.fail("123q/213q/321q at q=" + q.to_string());
        if (sequence(p213, ralt, 10) != sequence(p321, ralt, 10))
          o.fail("213q/321q reverse alternating at q=" + q.to_string());
        pairs += 4;
      }
    }
    for (int t = 4; t <= 5; ++t) {
      for (const auto& q : oracle::all_perms(t - 3)) {
        std::vector<int> a{t - 1, t, t - 2}, b{t - 2, t - 1, t};
        for (int x : q.one_based()) {
          a.push_back(x);
          b.push_back(x);
        }
        const auto pa = Permutation::from_one_based(a);
        const auto pb = Permutation::from_one_based(b);
        if (alt_seq(pa) != alt_seq(pb))
          o.fail(pa.to_string() + " vs " + pb.to_string());
        ++pairs;
      }
    }
    o.note(std::to_string(pairs) + " count equalities for n<=10");

    int witnesses = 0;
    for (int k = 1; k <= 5; ++k) {
      const auto dec = Permutation::decreasing(k);
      for (const auto& q : oracle::all_perms(k)) {
        if (q == dec) continue;
        const auto w = doubling_nonequivalence(dec, q, Parity::Even);
        if (!w.decided || w.count_p <= w.count_q ||
            w.count_p != count_avoiders_serial(dec, alt, w.witness_n) ||
            w.count_q != count_avoiders_serial(q, alt, w.witness_n)) {
          o.fail("no witness for " + dec.to_string() + " vs " + q.to_string());
          continue;
        }
        ++witnesses;
        if (k == 5 && q == P("12345")) {
          std::ostringstream s;
          s << "e.g. n=" << w.witness_n << ": " << w.count_p << " avoid 54321, "
            << w.count_q << " avoid 12345";
          o.note(s.str());
        }
      }
    }
    o.note(std::to_string(witnesses) + " decreasing-pattern witnesses, k<=5");

    const auto odd = classify(oracle::all_perms(4), alt,
                              lengths_of_parity(Parity::Odd, 1, 11));
    chain_in_block(o, odd, {"1234", "2134", "3214"}, "odd");
    chain_in_block(o, odd, {"2143", "1243", "3421", "2341"}, "odd");
    if (const auto* b = block_of(odd, P("1423")); b && odd.orbits(*b) > 1)
      o.note("odd, unlisted: " + odd.describe(*b));
    const auto even = classify(oracle::all_perms(4), alt,
                               lengths_of_parity(Parity::Even, 1, 10));
    chain_in_block(o, even, {"1234", "3214", "2134", "2143"}, "even");
    chain_in_block(o, even, {"2341", "3421"}, "even");
  });

  criterion("11", "F_k vs J_k on 1-semialternating diagrams, k<=4, rows<=6", 1800,
            [](Outcome& o) {
              ConjectureRanges r;
              r.k_min = 3;
              r.k_max = 4;
              r.rows = 6;
              const auto v = check_conjecture("sesa", r);
              o.note("sesa: " + v.status_text() + " (" + v.covered + ", " +
                     std::to_string(v.cases) + " cases)");
              if (v.status != ConjectureVerdict::Status::NoCounterexample)
                o.fail(v.witness);
            });

  std::cout << (failures ? std::to_string(failures) + " criteria failed"
                         : std::string("all criteria passed"))
            << "\n";
  return failures ? 1 : 0;
}
