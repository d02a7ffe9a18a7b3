#include "altperm/equivalence.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "altperm/cache.hpp"
#include "altperm/enumerate.hpp"
#include "altperm/young.hpp"

namespace altperm {

namespace {

std::uint64_t count(const Permutation& q, const PermClass& cls, int n,
                    CountCache* cache) {
  return count_avoiders({q, cls, n}, cache).count;
}

Permutation rc(const Permutation& q) { return q.reverse().complement(); }

bool all_parity(const std::vector<int>& lengths, int r) {
  if (lengths.empty()) return false;
  return std::all_of(lengths.begin(), lengths.end(),
                     [r](int n) { return n % 2 == r; });
}

std::optional<Parity> parity_of(const std::vector<int>& lengths) {
  if (all_parity(lengths, 0)) return Parity::Even;
  if (all_parity(lengths, 1)) return Parity::Odd;
  return std::nullopt;
}

bool alt_like(const PermClass& cls) {
  return cls.kind() == PermClass::Kind::Alternating ||
         cls.kind() == PermClass::Kind::ReverseAlternating;
}

std::string join(const std::vector<Permutation>& ps) {
  std::string s;
  for (const auto& p : ps) {
    if (!s.empty()) s += ' ';
    s += p.to_string();
  }
  return s;
}

std::vector<Permutation> all_of_length(int k) {
  std::vector<Permutation> out;
  for_each_member(PermClass::all(), k,
                  [&](const Permutation& p) { out.push_back(p); });
  return out;
}

// dk:K as the descent set {K, 2K, ...} within [n-1].
std::set<int> multiples(int k, int n) {
  std::set<int> s;
  for (int i = k; k > 0 && i <= n - 1; i += k) s.insert(i);
  return s;
}

bool no_two_consecutive(const std::set<int>& s, int upto) {
  for (int i : s) {
    if (i + 1 <= upto && s.count(i + 1)) return false;
  }
  return true;
}

std::pair<std::uint64_t, bool> count_with_encoding(const Permutation& q,
                                                   const PermClass& cls,
                                                   int n) {
  std::vector<Step> steps;
  if (!cls.steps(n, steps)) return {0, true};
  const std::uint64_t direct = count_avoiders_serial(q, cls, n);
  const auto y = ADYoungDiagram::for_class(cls, n);
  return {direct, count_avoiding_transversals(y, q) == direct};
}

using Clock = std::chrono::steady_clock;

struct Deadline {
  explicit Deadline(std::chrono::milliseconds b)
      : on(b.count() > 0), end(Clock::now() + b) {}
  bool passed() const { return on && Clock::now() > end; }
  bool on;
  Clock::time_point end;
};

ConjectureVerdict sesa(const ConjectureRanges& r, CountCache*) {
  if (r.k_min <= 2) {
    throw std::invalid_argument("sesa is stated for k > 2");
  }
  ConjectureVerdict v;
  Deadline dl(r.budget);
  int done_rows = 0;
  int current = 1;
  bool stop = false;
  std::vector<std::pair<Permutation, Permutation>> fj;
  for (int k = r.k_min; k <= r.k_max; ++k) {
    std::vector<int> f;
    for (int i = k - 1; i >= 1; --i) f.push_back(i);
    f.push_back(k);
    fj.emplace_back(Permutation::from_one_based(f), Permutation::decreasing(k));
  }
  for_each_ad_young(r.rows, [&](const ADYoungDiagram& y) {
    if (stop) return;
    if (y.size() != current) {
      done_rows = current;
      current = y.size();
      if (dl.passed()) {
        stop = true;
        v.status = ConjectureVerdict::Status::BudgetExceeded;
        return;
      }
    }
    if (!is_x_semialternating(y, 1)) return;
    for (std::size_t i = 0; i < fj.size(); ++i) {
      const auto a = count_avoiding_transversals(y, fj[i].first);
      const auto b = count_avoiding_transversals(y, fj[i].second);
      ++v.cases;
      if (a != b) {
        stop = true;
        v.status = ConjectureVerdict::Status::Counterexample;
        v.witness = "k=" + std::to_string(r.k_min + static_cast<int>(i)) +
                    " diagram " + y.to_string() + ": |S(F)|=" +
                    std::to_string(a) + " |S(J)|=" + std::to_string(b);
        return;
      }
    }
  });
  if (!stop) done_rows = r.rows;
  v.covered = "k=" + std::to_string(r.k_min) + ".." + std::to_string(r.k_max) +
              ", rows<=" + std::to_string(done_rows);
  return v;
}

ConjectureVerdict decreasing_conj(const ConjectureRanges& r,
                                  CountCache* cache) {
  ConjectureVerdict v;
  Deadline dl(r.budget);
  const auto alt = PermClass::alternating();
  int done_k = r.k_min - 1;
  for (int k = std::max(1, r.k_min); k <= r.k_max; ++k) {
    if (dl.passed()) {
      v.status = ConjectureVerdict::Status::BudgetExceeded;
      break;
    }
    const auto dec = Permutation::decreasing(k);
    const auto base = sequence(dec, alt, r.n_max, cache);
    for (const auto& q : all_of_length(k)) {
      if (q == dec) continue;
      const auto s = sequence(q, alt, r.n_max, cache);
      for (int n = 1; n <= r.n_max; ++n) {
        const auto a = s[n - 1], b = base[n - 1];
        ++v.cases;
        const bool strict = n % 2 == 0 && n >= 2 * k - 2;
        // Read as |A_n(q)| <= |A_n(k...1)|; the other direction already
        // fails at n = 2k - 2, where every alternating permutation avoids
        // k...1.
        if (a > b || (strict && a == b)) {
          v.status = ConjectureVerdict::Status::Counterexample;
          v.witness = "k=" + std::to_string(k) + " n=" + std::to_string(n) +
                      " q=" + q.to_string() + ": |A_n(q)|=" +
                      std::to_string(a) + (strict ? " not < " : " > ") +
                      std::to_string(b);
          v.covered = "k<" + std::to_string(k);
          return v;
        }
      }
    }
    done_k = k;
  }
  v.covered = "k=" + std::to_string(r.k_min) + ".." + std::to_string(done_k) +
              ", n<=" + std::to_string(r.n_max);
  return v;
}

ConjectureVerdict dk_pair(const ConjectureRanges& r, CountCache* cache,
                          const Permutation& p, const Permutation& q) {
  ConjectureVerdict v;
  Deadline dl(r.budget);
  int done_k = r.k_min - 1;
  for (int k = std::max(1, r.k_min); k <= r.k_max; ++k) {
    if (dl.passed()) {
      v.status = ConjectureVerdict::Status::BudgetExceeded;
      break;
    }
    const auto cls = PermClass::descent_type(k);
    const auto a = sequence(p, cls, r.n_max, cache);
    const auto b = sequence(q, cls, r.n_max, cache);
    for (int n = 1; n <= r.n_max; ++n) {
      ++v.cases;
      if (a[n - 1] != b[n - 1]) {
        v.status = ConjectureVerdict::Status::Counterexample;
        v.witness = "k=" + std::to_string(k) + " n=" + std::to_string(n) +
                    ": |D(" + p.to_string() + ")|=" + std::to_string(a[n - 1]) +
                    " |D(" + q.to_string() + ")|=" + std::to_string(b[n - 1]);
        v.covered = "k<" + std::to_string(k);
        return v;
      }
    }
    done_k = k;
  }
  v.covered = "k=" + std::to_string(r.k_min) + ".." + std::to_string(done_k) +
              ", n<=" + std::to_string(r.n_max);
  return v;
}

ConjectureVerdict dk_isolated(const ConjectureRanges& r, CountCache* cache) {
  ConjectureVerdict v;
  Deadline dl(r.budget);
  const auto s4 = all_of_length(4);
  int done_k = r.k_min - 1;
  for (int k = std::max(1, r.k_min); k <= r.k_max; ++k) {
    if (dl.passed()) {
      v.status = ConjectureVerdict::Status::BudgetExceeded;
      break;
    }
    const auto cls = PermClass::descent_type(k);
    std::map<Permutation, std::vector<std::uint64_t>> seq;
    for (const auto& q : s4) seq[q] = sequence(q, cls, r.n_max, cache);
    for (const char* text : {"1324", "1342", "3124", "3412"}) {
      const auto p = Permutation::parse(text);
      for (const auto& q : s4) {
        if (q == p) continue;
        ++v.cases;
        if (seq[p] == seq[q]) {
          // Agreement on a finite range cannot refute "differ somewhere".
          v.status = ConjectureVerdict::Status::Inconclusive;
          v.witness = "k=" + std::to_string(k) + ": " + p.to_string() +
                      " and " + q.to_string() + " agree for all n<=" +
                      std::to_string(r.n_max);
          v.covered = "k<" + std::to_string(k);
          return v;
        }
      }
    }
    done_k = k;
  }
  v.covered = "k=" + std::to_string(r.k_min) + ".." + std::to_string(done_k) +
              ", n<=" + std::to_string(r.n_max);
  return v;
}

}  // namespace

std::vector<Permutation> trivial_orbit(const Permutation& q,
                                       const PermClass& cls,
                                       const std::vector<int>& lengths) {
  std::set<Permutation> orbit{q};
  if (alt_like(cls)) {
    if (const auto par = parity_of(lengths)) {
      orbit.insert(*par == Parity::Odd ? q.reverse() : rc(q));
    }
  } else if (cls.kind() == PermClass::Kind::All) {
    std::vector<Permutation> todo{q};
    while (!todo.empty()) {
      const auto p = todo.back();
      todo.pop_back();
      for (const auto& s : {p.reverse(), p.complement(), p.inverse()}) {
        if (orbit.insert(s).second) todo.push_back(s);
      }
    }
  }
  return {orbit.begin(), orbit.end()};
}

std::vector<int> lengths_of_parity(Parity parity, int lo, int hi) {
  std::vector<int> out;
  for (int n = std::max(lo, 0); n <= hi; ++n) {
    if ((n % 2 == 0) == (parity == Parity::Even)) out.push_back(n);
  }
  return out;
}

bool known_open_pair(const Permutation& p, const Permutation& q,
                        Parity parity) {
  if (p == q) return false;
  const std::string a = p.to_string(), b = q.to_string();
  auto pair_is = [&](const char* x, const char* y) {
    return (a == x && b == y) || (a == y && b == x);
  };
  if (parity == Parity::Odd) {
    return pair_is("23451", "34521") || pair_is("43215", "32145");
  }
  const std::set<std::string> four{"32145", "43215", "23451", "34521"};
  return four.count(a) && four.count(b);
}

std::string EquivalenceReport::describe(const EquivalenceBlock& b) const {
  std::string s = "equal up to n_max=" + std::to_string(n_max()) + " (" +
                  (b.trivial ? "trivial" : "nontrivial") + "): " +
                  join(b.patterns);
  if (b.open) s += " [open]";
  return s;
}

int EquivalenceReport::orbits(const EquivalenceBlock& b) const {
  std::set<Permutation> reps;
  for (const auto& p : b.patterns) reps.insert(trivial_orbit(p, cls, lengths).front());
  return static_cast<int>(reps.size());
}

int EquivalenceReport::candidate_equivalences() const {
  int total = 0;
  for (const auto& b : blocks) total += orbits(b) - 1;
  return total;
}

EquivalenceReport classify(const std::vector<Permutation>& patterns,
                           const PermClass& cls, const std::vector<int>& lengths,
                           CountCache* cache) {
  if (patterns.empty()) throw std::invalid_argument("no patterns");
  if (lengths.empty()) throw std::invalid_argument("no lengths");
  if (!std::is_sorted(lengths.begin(), lengths.end())) {
    throw std::invalid_argument("lengths must be ascending");
  }
  EquivalenceReport rep;
  rep.cls = cls;
  rep.lengths = lengths;

  std::vector<std::vector<std::uint64_t>> seqs(patterns.size());
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    for (int n : lengths) seqs[i].push_back(count(patterns[i], cls, n, cache));
  }

  std::map<std::vector<std::uint64_t>, std::size_t> index;
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    auto [it, fresh] = index.try_emplace(seqs[i], rep.blocks.size());
    if (fresh) rep.blocks.push_back({{}, seqs[i], true, false});
    auto& blk = rep.blocks[it->second];
    if (std::find(blk.patterns.begin(), blk.patterns.end(), patterns[i]) ==
        blk.patterns.end()) {
      blk.patterns.push_back(patterns[i]);
    }
  }

  const auto par = parity_of(lengths);
  for (auto& blk : rep.blocks) {
    const auto orbit = trivial_orbit(blk.patterns.front(), cls, lengths);
    for (const auto& p : blk.patterns) {
      if (!std::binary_search(orbit.begin(), orbit.end(), p)) blk.trivial = false;
    }
    if (!par || !alt_like(cls)) continue;
    for (const auto& p : blk.patterns) {
      for (const auto& q : blk.patterns) {
        for (const auto& pp : trivial_orbit(p, cls, lengths)) {
          for (const auto& qq : trivial_orbit(q, cls, lengths)) {
            if (known_open_pair(pp, qq, *par)) blk.open = true;
          }
        }
      }
    }
  }
  return rep;
}

NonequivalenceVerdict doubling_nonequivalence(const Permutation& p,
                                              const Permutation& q,
                                              Parity parity,
                                              CountCache* cache) {
  NonequivalenceVerdict v;
  v.container_p = p.size() + doubling(p).doubling_number;
  v.container_q = q.size() + doubling(q).doubling_number;
  const int shift = parity == Parity::Even ? 0 : 1;
  auto half = [&](int len) { return (len - shift + 1) / 2; };  // ceil
  const int hp = half(v.container_p), hq = half(v.container_q);
  if (hp == hq) return v;
  const int low = std::min(hp, hq);
  v.witness_n = 2 * low + shift;
  const auto alt = PermClass::alternating();
  v.count_p = count(p, alt, v.witness_n, cache);
  v.count_q = count(q, alt, v.witness_n, cache);
  v.decided = v.count_p != v.count_q;
  return v;
}

InequalityCheck check_ineq_12_21(const Permutation& tail, const PermClass& cls,
                                 int n) {
  InequalityCheck c;
  c.p12 = Permutation::identity(2).direct_sum(tail);
  c.p21 = Permutation::decreasing(2).direct_sum(tail);
  const int t = tail.size() + 2;
  switch (cls.kind()) {
    case PermClass::Kind::DescentType:
    case PermClass::Kind::DescentSet: {
      const auto d = cls.kind() == PermClass::Kind::DescentSet
                         ? cls.indices()
                         : multiples(cls.k(), n);
      c.expect_le = true;
      c.hypothesis = !d.count(1) && no_two_consecutive(d, n + 1 - t);
      break;
    }
    case PermClass::Kind::AscentSet:
      c.expect_le = false;
      c.hypothesis = t > 2 && no_two_consecutive(cls.indices(), n + 2 - t);
      break;
    default:
      throw std::invalid_argument("need a descent- or ascent-set class");
  }
  const auto [a, ea] = count_with_encoding(c.p12, cls, n);
  const auto [b, eb] = count_with_encoding(c.p21, cls, n);
  c.count12 = a;
  c.count21 = b;
  c.encodings_agree = ea && eb;
  return c;
}

InequalityCheck check_ineq_complemented(const Permutation& w, int k, int n) {
  InequalityCheck c;
  const int t = w.size();
  std::vector<int> lo{t + 1, t + 2}, hi{t + 2, t + 1};
  for (int x : w.one_based()) {
    lo.push_back(x);
    hi.push_back(x);
  }
  c.p12 = Permutation::from_one_based(lo);
  c.p21 = Permutation::from_one_based(hi);
  c.expect_le = true;
  c.hypothesis = k >= 2;
  const auto cls = PermClass::descent_type(k);
  const auto [a, ea] = count_with_encoding(c.p12, cls, n);
  const auto [b, eb] = count_with_encoding(c.p21, cls, n);
  c.count12 = a;
  c.count21 = b;
  c.encodings_agree = ea && eb;
  return c;
}

std::string ConjectureVerdict::status_text() const {
  switch (status) {
    case Status::NoCounterexample:
      return "no counterexample";
    case Status::Counterexample:
      return "counterexample: " + witness;
    case Status::Inconclusive:
      return "inconclusive: " + witness;
    case Status::BudgetExceeded:
      return "budget exceeded";
  }
  return "";
}

ConjectureVerdict check_conjecture(const std::string& id,
                                   const ConjectureRanges& ranges,
                                   CountCache* cache) {
  if (ranges.k_min > ranges.k_max) throw std::invalid_argument("empty k range");
  ConjectureVerdict v;
  if (id == "sesa") {
    v = sesa(ranges, cache);
  } else if (id == "decreasing") {
    v = decreasing_conj(ranges, cache);
  } else if (id == "dk-2134" || id == "dk-1243") {
    const int m = ranges.length;
    if (m < 3) throw std::invalid_argument("pattern length must be >= 3");
    std::vector<int> a, b;
    if (id == "dk-2134") {
      a = {2, 1};
      for (int i = 3; i <= m; ++i) a.push_back(i);
      b = {m};
      for (int i = 1; i < m; ++i) b.push_back(i);
    } else {
      for (int i = 1; i <= m - 2; ++i) a.push_back(i);
      a.push_back(m);
      a.push_back(m - 1);
      for (int i = 2; i <= m; ++i) b.push_back(i);
      b.push_back(1);
    }
    v = dk_pair(ranges, cache, Permutation::from_one_based(a),
                Permutation::from_one_based(b));
  } else if (id == "dk-isolated") {
    v = dk_isolated(ranges, cache);
  } else {
    throw std::invalid_argument("unknown conjecture " + id);
  }
  v.id = id;
  v.ranges = ranges;
  return v;
}

TableReproduction reproduce_table(const ReferenceTable& table, int max_n,
                                  CountCache* cache) {
  TableReproduction r;
  r.table = &table;
  r.max_n = max_n;
  for (const auto& row : table.rows) {
    std::vector<std::optional<std::uint64_t>> out(table.lengths.size());
    for (std::size_t j = 0; j < table.lengths.size(); ++j) {
      const int n = table.lengths[j];
      if (n > max_n) continue;
      bool bad = false, split = false;
      for (const auto& p : row.patterns()) {
        const auto c = count(p, table.cls, n, cache);
        if (!out[j]) out[j] = c;
        if (*out[j] != c && !split) {
          split = true;
          r.splits.push_back({r.computed.size(), n, p, c});
        }
        bad = bad || *out[j] != c || (row.values[j] && *row.values[j] != c);
      }
      if (row.values[j]) ++r.compared;
      if (bad) ++r.mismatches;
    }
    r.computed.push_back(std::move(out));
  }
  return r;
}

}  // namespace altperm
