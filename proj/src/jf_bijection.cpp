#include "altperm/jf_bijection.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace altperm {

namespace {

// 1-based accessors.
int col(const Transversal& t, int i) { return t[i - 1] + 1; }
int len(const ADYoungDiagram& y, int i) { return y.shape.row(i - 1); }
bool in_a(const ADYoungDiagram& y, int i) { return y.ascents.count(i) > 0; }
bool in_d(const ADYoungDiagram& y, int i) { return y.descents.count(i) > 0; }

std::vector<int> interval(int lo, int hi) {
  std::vector<int> out;
  for (int i = lo; i <= hi; ++i) out.push_back(i);
  return out;
}

std::string triple_text(const Triple& a) {
  return "(" + std::to_string(a[0]) + "," + std::to_string(a[1]) + "," +
         std::to_string(a[2]) + ")";
}

Transversal shift(const YoungDiagram& y, const Transversal& t,
                  const std::vector<int>& rows, ColumnWindow window,
                  bool forward) {
  if (!rows.empty() && window.lo <= window.hi) {
    const int top = std::min(window.hi, t.size());
    if (y.row(rows.back() - 1) < top) {
      throw std::invalid_argument("shift window leaves the diagram");
    }
  }
  const auto g = gamma(t, rows, window);
  const int k = static_cast<int>(g.size());
  if (k < 2) return t;
  std::vector<int> cols(t.entries().begin(), t.entries().end());
  for (int j = 0; j < k; ++j) {
    const int from = forward ? g[(j + k - 1) % k] : g[(j + 1) % k];
    cols[g[j] - 1] = t[from - 1];
  }
  return Transversal(std::move(cols));
}

Triple min_hash(const std::vector<Triple>& u) {
  return *std::min_element(u.begin(), u.end(), [](const Triple& a, const Triple& b) {
    return hash_key(a) < hash_key(b);
  });
}

struct Step {
  Triple triple{};
  int type = 0;
  Transversal after;
};

void check_increasing(LemmaAudit* audit, const std::string& lemma,
                      const std::vector<int>& g, const Transversal& before,
                      const Transversal& after, const std::string& ctx) {
  bool ok = true;
  for (std::size_t j = 1; j < g.size(); ++j) {
    ok = ok && col(before, g[j - 1]) < col(before, g[j]) &&
         col(after, g[j - 1]) < col(after, g[j]);
  }
  audit->record(lemma, ok, ctx);
}

std::string context(const ADYoungDiagram& y, const Transversal& t,
                    const Triple& a) {
  return y.to_string() + " T=" + t.to_string() + " a=" + triple_text(a);
}

void audit_common(LemmaAudit* audit, const Transversal& t,
                  const Transversal& c, const std::string& ctx) {
  if (t[0] == 0) audit->record("AddA1", c[0] == 0, ctx);
}

Step step_phi(const ADYoungDiagram& y, const Transversal& t,
              LemmaAudit* audit) {
  if (!is_valid_transversal(y, t)) {
    throw std::invalid_argument("phi: not a valid transversal");
  }
  const auto u = j3_copies(y, t);
  if (u.empty()) throw std::invalid_argument("phi: no copy of J3");
  if (!is_separable(y, t)) throw std::invalid_argument("phi: not separable");
  Step s;
  s.triple = min_hash(u);
  const auto [a1, a2, a3] = s.triple;
  s.type = classify_J(y, t, s.triple);
  const YoungDiagram& shape = y.shape;
  switch (s.type) {
    case 1:
      s.after = theta(shape, t, {a1, a2, a3}, {1, col(t, a1)});
      break;
    case 2:
      s.after = omega(shape, t, {a1, a3 - 1}, {1, col(t, a1)});
      break;
    default: {
      const ColumnWindow w{col(t, a3), col(t, a1)};
      const auto mid = omega(shape, t, interval(a2, a3), w);
      auto outer = interval(1, a1);
      outer.push_back(a3 + 1);
      s.after = omega(shape, mid, outer, w);
    }
  }
  if (audit) {
    const auto ctx = context(y, t, s.triple);
    audit->record("EPhi", e_phi_is_empty(y, t, s.triple), ctx);
    if (s.type == 2) {
      audit->record("JType2L1",
                    col(t, a2) <= col(t, a3 - 1) && a3 - a1 >= 3, ctx);
    }
    if (s.type == 3) {
      const ColumnWindow w{col(t, a3), col(t, a1)};
      check_increasing(audit, "JType3L1", gamma(t, interval(1, a1), w), t,
                       s.after, ctx);
      const auto g = gamma(t, interval(a2, a3 - 1), w);
      check_increasing(audit, "JType3L1", g, t, s.after, ctx);
      audit->record("JType3L1",
                    g.empty() || col(s.after, g.back()) < col(s.after, a3),
                    ctx);
    }
    audit_common(audit, t, s.after, ctx);
  }
  return s;
}

Step step_psi(const ADYoungDiagram& y, const Transversal& t,
              LemmaAudit* audit) {
  if (!is_valid_transversal(y, t)) {
    throw std::invalid_argument("psi: not a valid transversal");
  }
  const auto v = f3_copies(y, t);
  if (v.empty()) throw std::invalid_argument("psi: no copy of F3");
  if (!is_separable(y, t)) throw std::invalid_argument("psi: not separable");
  Step s;
  s.triple = select_F(y, t);
  const auto [a1, a2, a3] = s.triple;
  s.type = classify_F(y, t, s.triple).type;
  const YoungDiagram& shape = y.shape;
  switch (s.type) {
    case 1:
      s.after = omega(shape, t, {a1, a2, a3}, {1, col(t, a3)});
      break;
    case 2:
      s.after = theta(shape, t, {a1, a3}, {1, col(t, a3)});
      break;
    default: {
      const ColumnWindow w{col(t, a2), col(t, a3)};
      auto inner = interval(1, a1);
      inner.push_back(a3);
      const auto mid = theta(shape, t, inner, w);
      s.after = theta(shape, mid, interval(a2, a3 - 1), w);
    }
  }
  if (audit) {
    const auto ctx = context(y, t, s.triple);
    audit->record("EPsi", e_psi_is_empty(y, t, s.triple), ctx);
    if (s.type == 3) {
      const ColumnWindow w{col(t, a2), col(t, a3)};
      const auto head = gamma(t, interval(1, a1), w);
      check_increasing(audit, "FType3L1", head, t, s.after, ctx);
      // Second part, in the form the shift supports: b climbs from b_{a1}
      // over rows strictly between a2 and a3, c climbs once a3 - 1 (which
      // receives b_{a2} on the wrap) is left out.
      const auto g = gamma(t, interval(a2 + 1, a3 - 1), w);
      bool ok = true;
      int prev = col(t, a1);
      for (int i : g) {
        ok = ok && prev < col(t, i);
        prev = col(t, i);
      }
      audit->record("FType3L1", ok, ctx);
      check_increasing(audit, "FType3L1", gamma(t, interval(a2 + 1, a3 - 2), w),
                       t, s.after, ctx);
      // Nothing of T below row a3 and right of column b_m.
      bool empty = true;
      if (!head.empty()) {
        const int bm = col(t, head.front());
        for (int i = a3 + 1; i <= t.size(); ++i) {
          if (col(t, i) > bm) empty = false;
        }
      }
      audit->record("FType3L2", empty, ctx);
    }
    audit_common(audit, t, s.after, ctx);
  }
  return s;
}

std::uint64_t step_budget(int n) {
  std::uint64_t b = static_cast<std::uint64_t>(n);
  for (int i = 2; i <= n; ++i) {
    if (b > std::numeric_limits<std::uint64_t>::max() / i) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    b *= static_cast<std::uint64_t>(i);
  }
  return b;
}

const Permutation kJ3 = Permutation::parse("321");
const Permutation kF3 = Permutation::parse("213");

Transversal iterate(const ADYoungDiagram& y, const Transversal& t, bool forward,
                    std::vector<TraceStep>* trace, LemmaAudit* audit) {
  const Permutation& stop = forward ? kJ3 : kF3;
  const std::uint64_t budget = step_budget(y.size());
  Transversal cur = t;
  for (std::uint64_t k = 0; transversal_contains(y.shape, cur, stop); ++k) {
    if (k >= budget) throw std::logic_error("step budget exhausted");
    const Step s = forward ? step_phi(y, cur, audit) : step_psi(y, cur, audit);
    if (forward ? !(s.after < cur) : !(cur < s.after)) {
      throw std::logic_error("step did not move lexicographically");
    }
    if (trace) {
      trace->push_back({static_cast<int>(k) + 1, forward ? 'J' : 'F', s.triple,
                        s.type, cur, s.after});
    }
    cur = s.after;
  }
  return cur;
}

}  // namespace

std::vector<int> gamma(const Transversal& t, const std::vector<int>& rows,
                       ColumnWindow window) {
  std::vector<int> out;
  for (int i : rows) {
    if (i < 1 || i > t.size()) continue;
    const int c = col(t, i);
    if (c >= window.lo && c <= window.hi) out.push_back(i);
  }
  return out;
}

Transversal omega(const YoungDiagram& y, const Transversal& t,
                  const std::vector<int>& rows, ColumnWindow window) {
  return shift(y, t, rows, window, true);
}

Transversal theta(const YoungDiagram& y, const Transversal& t,
                  const std::vector<int>& rows, ColumnWindow window) {
  return shift(y, t, rows, window, false);
}

std::vector<Triple> j3_copies(const ADYoungDiagram& y, const Transversal& t) {
  std::vector<Triple> out;
  const int n = t.size();
  for (int a3 = 3; a3 <= n; ++a3) {
    for (int a1 = 1; a1 < a3; ++a1) {
      if (col(t, a1) <= col(t, a3) || col(t, a1) > len(y, a3)) continue;
      for (int a2 = a1 + 1; a2 < a3; ++a2) {
        if (col(t, a1) > col(t, a2) && col(t, a2) > col(t, a3)) {
          out.push_back({a1, a2, a3});
        }
      }
    }
  }
  return out;
}

std::vector<Triple> f3_copies(const ADYoungDiagram& y, const Transversal& t) {
  std::vector<Triple> out;
  const int n = t.size();
  for (int a3 = 3; a3 <= n; ++a3) {
    if (in_a(y, a3)) continue;
    for (int a1 = 1; a1 < a3; ++a1) {
      if (col(t, a1) > col(t, a3)) continue;
      for (int a2 = a1 + 1; a2 < a3; ++a2) {
        if (col(t, a2) < col(t, a1)) out.push_back({a1, a2, a3});
      }
    }
  }
  return out;
}

int classify_J(const ADYoungDiagram& y, const Transversal& t, const Triple& a) {
  const auto [a1, a2, a3] = a;
  const int n = t.size();
  if (!(1 <= a1 && a1 < a2 && a2 < a3 && a3 <= n) ||
      !(col(t, a1) > col(t, a2) && col(t, a2) > col(t, a3)) ||
      col(t, a1) > len(y, a3)) {
    throw std::invalid_argument("not a copy of J3");
  }
  const bool d = in_d(y, a3 - 1);
  const int prev = col(t, a3 - 1), top = col(t, a1);
  const bool c1 = (!d || top < prev) && !in_a(y, a3);
  const bool c2 = d && prev < top;
  const bool c3 = (!d || prev > top) && in_a(y, a3);
  if (c1 + c2 + c3 != 1) {
    throw std::logic_error("J-type cases overlap or miss " + triple_text(a));
  }
  return c1 ? 1 : c2 ? 2 : 3;
}

FClass classify_F(const ADYoungDiagram& y, const Transversal& t,
                  const Triple& a) {
  const auto [a1, a2, a3] = a;
  const int n = t.size();
  if (!(1 <= a1 && a1 < a2 && a2 < a3 && a3 <= n) ||
      !(col(t, a2) < col(t, a1) && col(t, a1) < col(t, a3)) || in_a(y, a3)) {
    throw std::invalid_argument("not an eligible copy of F3");
  }
  if (!in_a(y, a3 - 1)) return {1, {a3, a1, a2}};
  if (a2 == a3 - 1) return {2, {a3 + 1, a1, 0}};
  return {3, {a3 - 1, a1, a2}};
}

Triple s_inverse(const ADYoungDiagram& y, const Triple& key) {
  // The key is in #-order (a3, a1, a2); undo that first.
  const int d1 = key[1], d2 = key[2], d3 = key[0];
  if (d2 == 0) return {d1, d3 - 2, d3 - 1};
  if (in_a(y, d3)) return {d1, d2, d3 + 1};
  return {d1, d2, d3};
}

Triple select_J(const ADYoungDiagram& y, const Transversal& t) {
  const auto u = j3_copies(y, t);
  if (u.empty()) throw std::invalid_argument("no copy of J3");
  return min_hash(u);
}

Triple select_F(const ADYoungDiagram& y, const Transversal& t) {
  const auto v = f3_copies(y, t);
  if (v.empty()) throw std::invalid_argument("no eligible copy of F3");
  Triple best = v.front();
  Triple best_key = classify_F(y, t, best).key;
  for (const auto& a : v) {
    const Triple k = classify_F(y, t, a).key;
    if (k > best_key) {
      best = a;
      best_key = k;
    }
  }
  return best;
}

bool is_separable(const ADYoungDiagram& y, const Transversal& t) {
  const auto u = j3_copies(y, t);
  if (u.empty()) return true;
  const auto v = f3_copies(y, t);
  if (v.empty()) return true;
  const Triple low = hash_key(min_hash(u));
  for (const auto& a : v) {
    if (classify_F(y, t, a).key > low) return false;
  }
  return true;
}

void LemmaAudit::record(const std::string& lemma, bool ok,
                        const std::string& ctx) {
  ++checked[lemma];
  if (ok) return;
  ++failed[lemma];
  if (examples.size() < 8) examples.push_back(lemma + ": " + ctx);
}

Transversal phi(const ADYoungDiagram& y, const Transversal& t,
                LemmaAudit* audit) {
  return step_phi(y, t, audit).after;
}

Transversal psi(const ADYoungDiagram& y, const Transversal& t,
                LemmaAudit* audit) {
  return step_psi(y, t, audit).after;
}

bool e_phi_is_empty(const ADYoungDiagram& y, const Transversal& t,
                    const Triple& a) {
  const auto [a1, a2, a3] = a;
  const int b1 = col(t, a1), b2 = col(t, a2), b3 = col(t, a3);
  for (int i = 1; i <= t.size(); ++i) {
    const int b = col(t, i);
    if ((i < a1 && b >= b2 && b <= len(y, a3)) ||
        (i > a1 && i < a2 && b >= b3 && b <= b1) ||
        (i > a2 && i < a3 && b <= b2) || (i > a3 && b > b2)) {
      return false;
    }
  }
  return true;
}

bool e_psi_is_empty(const ADYoungDiagram& y, const Transversal& t,
                    const Triple& a) {
  const auto [a1, a2, a3] = a;
  const int b1 = col(t, a1), b2 = col(t, a2), b3 = col(t, a3);
  for (int i = 1; i <= t.size(); ++i) {
    const int b = col(t, i);
    if ((i < a1 && b >= b1 && b <= len(y, a3)) ||
        (i > a1 && i < a2 && b >= b2 && b <= b3) ||
        (i > a2 && i < a3 && b <= b1) || (i > a3 && b > b1)) {
      return false;
    }
  }
  return true;
}

std::string format_trace_step(const TraceStep& s) {
  std::ostringstream os;
  os << s.index << ' ' << (s.family == 'J' ? "phi" : "psi") << ' '
     << triple_text(s.triple) << ' ' << s.family << "-type " << s.type << ' '
     << s.before.to_string() << " -> " << s.after.to_string();
  return os.str();
}

Transversal Phi(const ADYoungDiagram& y, const Transversal& t,
                std::vector<TraceStep>* trace, LemmaAudit* audit) {
  return iterate(y, t, true, trace, audit);
}

Transversal Psi(const ADYoungDiagram& y, const Transversal& t,
                std::vector<TraceStep>* trace, LemmaAudit* audit) {
  return iterate(y, t, false, trace, audit);
}

ADYoungDiagram alpha_diagram(const ADYoungDiagram& y) {
  if (!is_x_semialternating(y, 1) || !in_d(y, 1)) {
    throw std::invalid_argument("alpha needs a 1-semialternating diagram with 1 in D");
  }
  std::vector<int> rows{y.shape.row(0) + 1};
  for (int r : y.shape.rows()) rows.push_back(r + 1);
  std::set<int> a{1}, d;
  for (int i : y.ascents) a.insert(i + 1);
  for (int i : y.descents) d.insert(i + 1);
  return ADYoungDiagram::make(YoungDiagram(std::move(rows)), std::move(a),
                              std::move(d));
}

Transversal alpha(const Transversal& t) {
  std::vector<int> cols{0};
  for (int c : t.entries()) cols.push_back(c + 1);
  return Transversal(std::move(cols));
}

Transversal alpha_inverse(const Transversal& t) {
  if (t.empty() || t[0] != 0) {
    throw std::invalid_argument("transversal is outside the image of alpha");
  }
  std::vector<int> cols;
  for (int i = 1; i < t.size(); ++i) cols.push_back(t[i] - 1);
  return Transversal(std::move(cols));
}

Transversal Phi_semi(const ADYoungDiagram& y, const Transversal& t,
                     LemmaAudit* audit) {
  if (!in_d(y, 1)) return Phi(y, t, nullptr, audit);
  return alpha_inverse(Phi(alpha_diagram(y), alpha(t), nullptr, audit));
}

Transversal Psi_semi(const ADYoungDiagram& y, const Transversal& t,
                     LemmaAudit* audit) {
  if (!in_d(y, 1)) return Psi(y, t, nullptr, audit);
  return alpha_inverse(Psi(alpha_diagram(y), alpha(t), nullptr, audit));
}

}  // namespace altperm
