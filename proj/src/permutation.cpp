#include "altperm/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <ostream>
#include <sstream>

namespace altperm {

namespace {

bool is_rearrangement(const std::vector<int>& v) {
  std::vector<char> seen(v.size(), 0);
  for (int x : v) {
    if (x < 0 || x >= static_cast<int>(v.size()) || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

int parse_int(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace

Permutation::Permutation(std::vector<int> entries)
    : entries_(std::move(entries)) {
  if (!is_rearrangement(entries_)) {
    throw std::invalid_argument("entries are not a permutation of 0..n-1");
  }
}

Permutation Permutation::from_one_based(std::span<const int> values) {
  std::vector<int> e(values.begin(), values.end());
  for (int& x : e) --x;
  return Permutation(std::move(e));
}

Permutation Permutation::from_one_based(std::initializer_list<int> values) {
  return from_one_based(std::span<const int>(values.begin(), values.size()));
}

Permutation Permutation::identity(int n) {
  std::vector<int> e(static_cast<std::size_t>(n));
  std::iota(e.begin(), e.end(), 0);
  return Permutation(std::move(e));
}

Permutation Permutation::decreasing(int n) {
  std::vector<int> e(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) e[i] = n - 1 - i;
  return Permutation(std::move(e));
}

Permutation Permutation::standardize(std::span<const int> values) {
  std::vector<int> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return values[a] < values[b]; });
  std::vector<int> e(values.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    e[order[r]] = static_cast<int>(r);
  }
  return Permutation(std::move(e));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> values;
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t comma = text.find(',', start);
      if (comma == std::string_view::npos) comma = text.size();
      values.push_back(parse_int(text.substr(start, comma - start)));
      start = comma + 1;
    }
  } else {
    for (char c : text) {
      if (c < '1' || c > '9') {
        throw std::invalid_argument("bad permutation text: '" +
                                    std::string(text) + "'");
      }
      values.push_back(c - '0');
    }
  }
  for (int& v : values) --v;
  if (!is_rearrangement(values)) {
    throw std::invalid_argument("not a permutation: '" + std::string(text) +
                                "'");
  }
  return Permutation(std::move(values));
}

std::vector<int> Permutation::one_based() const {
  std::vector<int> e = entries_;
  for (int& x : e) ++x;
  return e;
}

std::string Permutation::to_string() const {
  std::string out;
  const bool compact = size() <= 9;
  for (int i = 0; i < size(); ++i) {
    if (!compact && i > 0) out += ',';
    out += std::to_string(entries_[i] + 1);
  }
  return out;
}

Permutation Permutation::complement() const {
  std::vector<int> e = entries_;
  const int n = size();
  for (int& x : e) x = n - 1 - x;
  return Permutation(std::move(e));
}

Permutation Permutation::reverse() const {
  std::vector<int> e(entries_.rbegin(), entries_.rend());
  return Permutation(std::move(e));
}

Permutation Permutation::inverse() const {
  std::vector<int> e(entries_.size());
  for (int i = 0; i < size(); ++i) e[entries_[i]] = i;
  return Permutation(std::move(e));
}

Permutation Permutation::direct_sum(const Permutation& other) const {
  std::vector<int> e = entries_;
  for (int x : other.entries_) e.push_back(x + size());
  return Permutation(std::move(e));
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  return os << p.to_string();
}

// ---------------------------------------------------------------------------

PatternMatcher::PatternMatcher(const Permutation& pattern)
    : pattern_(pattern) {
  const int b = pattern.size();
  free_slots_.resize(b);
  tail_slots_.resize(b);
  auto fill = [&](int idx, bool with_last, Slot& slot) {
    const int v = pattern[idx];
    int best_below = -1, best_above = -1;
    auto consider = [&](int j) {
      const int w = pattern[j];
      if (w < v && (best_below < 0 || w > pattern[best_below])) best_below = j;
      if (w > v && (best_above < 0 || w < pattern[best_above])) best_above = j;
    };
    for (int j = 0; j < idx; ++j) consider(j);
    if (with_last && idx != b - 1) consider(b - 1);
    slot.below = best_below;
    slot.above = best_above;
  };
  for (int idx = 0; idx < b; ++idx) {
    fill(idx, false, free_slots_[idx]);
    fill(idx, true, tail_slots_[idx]);
  }
}

bool PatternMatcher::search(std::span<const int> text, int next_pos, int idx,
                            int limit, int cap, int* chosen) const {
  const int b = length();
  const bool tail_mode = limit < static_cast<int>(text.size());
  const int stop = tail_mode ? b - 1 : b;
  if (idx == stop) return true;
  const Slot& slot = tail_mode ? tail_slots_[idx] : free_slots_[idx];
  const int lo = slot.below < 0 ? INT32_MIN : chosen[slot.below];
  const int hi = slot.above < 0 ? INT32_MAX : chosen[slot.above];
  const int last_pos = limit - (stop - idx);
  for (int pos = next_pos; pos <= last_pos; ++pos) {
    const int v = text[pos];
    if (v <= lo || v >= hi || v > cap) continue;
    chosen[idx] = v;
    if (search(text, pos + 1, idx + 1, limit, cap, chosen)) return true;
  }
  return false;
}

bool PatternMatcher::occurs_in(std::span<const int> text) const {
  const int b = length();
  if (b == 0) return true;
  if (static_cast<int>(text.size()) < b) return false;
  int chosen[64] = {};
  return search(text, 0, 0, static_cast<int>(text.size()), INT32_MAX, chosen);
}

bool PatternMatcher::occurs_ending_at_last(std::span<const int> text,
                                           int value_cap) const {
  const int b = length();
  if (b == 0) return true;
  const int n = static_cast<int>(text.size());
  if (n < b) return false;
  int chosen[64] = {};
  chosen[b - 1] = text[n - 1];
  if (text[n - 1] > value_cap) return false;
  return search(text, 0, 0, n - 1, value_cap, chosen);
}

bool contains(const Permutation& w, const Permutation& q) {
  if (q.empty()) return true;
  return PatternMatcher(q).occurs_in(w.entries());
}

// ---------------------------------------------------------------------------

PermClass PermClass::descent_type(int k) {
  if (k < 1) throw std::invalid_argument("descent type k must be >= 1");
  PermClass c(Kind::DescentType);
  c.k_ = k;
  return c;
}

PermClass PermClass::descent_set(std::set<int> d) {
  PermClass c(Kind::DescentSet);
  c.indices_ = std::move(d);
  return c;
}

PermClass PermClass::ascent_set(std::set<int> a) {
  PermClass c(Kind::AscentSet);
  c.indices_ = std::move(a);
  return c;
}

PermClass PermClass::parse(std::string_view text) {
  if (text == "all") return all();
  if (text == "alt") return alternating();
  if (text == "ralt") return reverse_alternating();
  auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("unknown class '" + std::string(text) + "'");
  }
  const std::string_view head = text.substr(0, colon);
  const std::string_view rest = text.substr(colon + 1);
  if (head == "dk") return descent_type(parse_int(rest));
  std::set<int> idx;
  std::size_t start = 0;
  while (start < rest.size()) {
    std::size_t comma = rest.find(',', start);
    if (comma == std::string_view::npos) comma = rest.size();
    const int i = parse_int(rest.substr(start, comma - start));
    if (i < 1) throw std::invalid_argument("indices are 1-based");
    idx.insert(i);
    start = comma + 1;
  }
  if (head == "dset") return descent_set(std::move(idx));
  if (head == "aset") return ascent_set(std::move(idx));
  throw std::invalid_argument("unknown class '" + std::string(text) + "'");
}

bool PermClass::steps(int n, std::vector<Step>& out) const {
  out.assign(n > 0 ? static_cast<std::size_t>(n - 1) : 0, Step::Free);
  for (int i = 0; i + 1 < n; ++i) {
    const int j = i + 1;  // 1-based index of the pair (w_j, w_{j+1})
    switch (kind_) {
      case Kind::All:
        break;
      case Kind::Alternating:
        out[i] = (j % 2 == 1) ? Step::Ascent : Step::Descent;
        break;
      case Kind::ReverseAlternating:
        out[i] = (j % 2 == 1) ? Step::Descent : Step::Ascent;
        break;
      case Kind::DescentType:
        out[i] = (j % k_ == 0) ? Step::Descent : Step::Ascent;
        break;
      case Kind::DescentSet:
        out[i] = indices_.count(j) ? Step::Descent : Step::Ascent;
        break;
      case Kind::AscentSet:
        out[i] = indices_.count(j) ? Step::Ascent : Step::Descent;
        break;
    }
  }
  if (kind_ == Kind::DescentSet || kind_ == Kind::AscentSet) {
    for (int j : indices_) {
      if (j < 1 || j > n - 1) return false;
    }
  }
  return true;
}

bool PermClass::contains(const Permutation& w) const {
  std::vector<Step> st;
  if (!steps(w.size(), st)) return false;
  for (int i = 0; i + 1 < w.size(); ++i) {
    if (st[i] == Step::Ascent && !(w[i] < w[i + 1])) return false;
    if (st[i] == Step::Descent && !(w[i] > w[i + 1])) return false;
  }
  return true;
}

std::string PermClass::to_string() const {
  auto join = [](const std::set<int>& s) {
    std::string out;
    for (int x : s) {
      if (!out.empty()) out += ',';
      out += std::to_string(x);
    }
    return out;
  };
  switch (kind_) {
    case Kind::All:
      return "all";
    case Kind::Alternating:
      return "alt";
    case Kind::ReverseAlternating:
      return "ralt";
    case Kind::DescentType:
      return "dk:" + std::to_string(k_);
    case Kind::DescentSet:
      return "dset:" + join(indices_);
    case Kind::AscentSet:
      return "aset:" + join(indices_);
  }
  return "?";
}

bool class_member(const Permutation& w, const PermClass& c) {
  return c.contains(w);
}

bool is_alternating(const Permutation& w) {
  return PermClass::alternating().contains(w);
}

bool is_reverse_alternating(const Permutation& w) {
  return PermClass::reverse_alternating().contains(w);
}

// ---------------------------------------------------------------------------

DoublingProfile doubling(const Permutation& p) {
  DoublingProfile out;
  const int k = p.size();
  for (int i = 1; i <= k - 1; ++i) {
    // p_{i-1}, p_i, p_{i+1} in 1-based terms; p_0 is +infinity.
    const bool prev_greater = (i == 1) || p[i - 2] > p[i - 1];
    const bool next_smaller = p[i - 1] > p[i];
    const bool double_descent = prev_greater && next_smaller;
    const bool double_ascent = (i > 1) && p[i - 2] < p[i - 1] && !next_smaller;
    if (double_descent || double_ascent) out.doubling_set.insert(i);
  }
  out.doubling_number = static_cast<int>(out.doubling_set.size());
  return out;
}

Permutation shortest_alternating_container(const Permutation& p) {
  const int k = p.size();
  if (k == 0) return p;
  const DoublingProfile prof = doubling(p);
  const int len = k + prof.doubling_number;

  // Entry m (1-based) goes to slot m + |d(p) ∩ [m-1]|, except that p_1
  // moves to slot 2 when 1 ∈ d(p): a leading descent has to start on a
  // peak.  Every later doubling index i leaves one gap between p_i and
  // p_{i+1}.
  std::vector<int> source(len + 1, 0);  // 1-based slot -> 1-based index
  int skipped = prof.doubling_set.count(1) ? 1 : 0;
  for (int m = 1; m <= k; ++m) {
    if (m >= 3 && prof.doubling_set.count(m - 1)) ++skipped;
    source[m + skipped] = m;
  }
  // Gaps at odd slots are valleys and take the smallest values; gaps at
  // even slots are peaks and take the largest.
  int valleys = 0;
  for (int i = 1; i <= len; i += 2) {
    if (source[i] == 0) ++valleys;
  }
  std::vector<int> w(len, 0);
  int low = 0, high = 0;
  for (int i = 1; i <= len; ++i) {
    if (source[i] != 0) {
      w[i - 1] = p[source[i] - 1] + 1 + valleys;
    } else if (i % 2 == 1) {
      w[i - 1] = ++low;
    } else {
      w[i - 1] = len - high++;
    }
  }
  return Permutation::from_one_based(w);
}

}  // namespace altperm
