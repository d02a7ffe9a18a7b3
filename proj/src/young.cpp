#include "altperm/young.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "altperm/kernel.hpp"

namespace altperm {

namespace {

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view tok = text.substr(pos, end - pos);
    int v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size()) {
      throw std::invalid_argument("bad integer list: " + std::string(text));
    }
    out.push_back(v);
    pos = end + 1;
  }
  return out;
}

std::string join(const std::set<int>& s) {
  std::string out;
  for (int x : s) {
    if (!out.empty()) out += ',';
    out += std::to_string(x);
  }
  return out;
}

// Window form of the (w, x)-alternating condition.
bool windowed_alternating(const ADYoungDiagram& y, int w, int x) {
  if (x < 1) throw std::invalid_argument("x must be positive");
  const int n = y.size();
  for (int i = w - 1; i <= n - x; ++i) {
    if ((y.ascents.count(i) != 0) != (y.descents.count(i + 1) != 0)) {
      return false;
    }
  }
  return true;
}

SearchSpec diagram_spec(const ADYoungDiagram& y, const PatternMatcher* m) {
  SearchSpec spec;
  spec.n = y.size();
  spec.steps = y.steps();
  spec.caps.resize(static_cast<std::size_t>(spec.n));
  for (int i = 0; i < spec.n; ++i) spec.caps[i] = y.shape.row(i) - 1;
  spec.avoid = m;
  return spec;
}

}  // namespace

YoungDiagram::YoungDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
  const int n = size();
  for (int i = 0; i < n; ++i) {
    if (rows_[i] < 1) throw std::invalid_argument("empty row in diagram");
    if (i > 0 && rows_[i] > rows_[i - 1]) {
      throw std::invalid_argument("row lengths must weakly decrease");
    }
  }
  if (n > 0 && rows_[0] != n) {
    throw std::invalid_argument(
        "diagram must have as many rows as its first row has squares");
  }
}

YoungDiagram YoungDiagram::square(int n) {
  return YoungDiagram(std::vector<int>(static_cast<std::size_t>(n), n));
}

YoungDiagram YoungDiagram::staircase(int n) {
  std::vector<int> rows;
  for (int i = n; i >= 1; --i) rows.push_back(i);
  return YoungDiagram(rows);
}

YoungDiagram YoungDiagram::parse(std::string_view text) {
  return YoungDiagram(parse_int_list(text));
}

bool YoungDiagram::contains_staircase() const {
  for (int i = 0; i < size(); ++i) {
    if (row(i) < size() - i) return false;
  }
  return true;
}

std::string YoungDiagram::to_string() const {
  std::string out;
  for (int r : rows_) {
    if (!out.empty()) out += ',';
    out += std::to_string(r);
  }
  return out;
}

bool is_transversal_of(const YoungDiagram& y, const Transversal& t) {
  if (t.size() != y.size()) return false;
  for (int i = 0; i < t.size(); ++i) {
    if (!y.contains_square(i, t[i])) return false;
  }
  return true;
}

bool is_ad_young(const YoungDiagram& y, const std::set<int>& a,
                 const std::set<int>& d) {
  const int n = y.size();
  for (int i : a) {
    if (i < 1 || i > n - 1 || d.count(i)) return false;
    if (y.row(i - 1) != y.row(i)) return false;
  }
  for (int i : d) {
    if (i < 1 || i > n - 1) return false;
    if (y.row(i - 1) != y.row(i)) return false;
  }
  return true;
}

ADYoungDiagram ADYoungDiagram::make(YoungDiagram y, std::set<int> a,
                                    std::set<int> d, bool relaxed) {
  const int n = y.size();
  for (int i : a) {
    if (i < 1 || i > n - 1) throw std::invalid_argument("A outside [n-1]");
    if (d.count(i)) throw std::invalid_argument("A and D intersect");
  }
  for (int i : d) {
    if (i < 1 || i > n - 1) throw std::invalid_argument("D outside [n-1]");
  }
  if (!relaxed && !is_ad_young(y, a, d)) {
    throw std::invalid_argument("rows around A/D indices differ in length");
  }
  return ADYoungDiagram{std::move(y), std::move(a), std::move(d)};
}

ADYoungDiagram ADYoungDiagram::for_class(const PermClass& cls, int n) {
  std::vector<Step> steps;
  if (!cls.steps(n, steps)) {
    throw std::invalid_argument("class is empty at this length");
  }
  std::set<int> a, d;
  for (int i = 0; i + 1 < n; ++i) {
    if (steps[i] == Step::Ascent) a.insert(i + 1);
    if (steps[i] == Step::Descent) d.insert(i + 1);
  }
  return make(YoungDiagram::square(n), std::move(a), std::move(d));
}

ADYoungDiagram ADYoungDiagram::parse(std::string_view text) {
  const auto semi1 = text.find(';');
  const auto semi2 =
      semi1 == std::string_view::npos ? semi1 : text.find(';', semi1 + 1);
  if (semi2 == std::string_view::npos) {
    throw std::invalid_argument("expected ROWS;A=..;D=..");
  }
  const auto rows = text.substr(0, semi1);
  const auto a = text.substr(semi1 + 1, semi2 - semi1 - 1);
  const auto d = text.substr(semi2 + 1);
  if (!a.starts_with("A=") || !d.starts_with("D=")) {
    throw std::invalid_argument("expected ROWS;A=..;D=..");
  }
  auto to_set = [](std::string_view s) {
    const auto v = parse_int_list(s);
    return std::set<int>(v.begin(), v.end());
  };
  return make(YoungDiagram::parse(rows), to_set(a.substr(2)),
              to_set(d.substr(2)), /*relaxed=*/true);
}

std::string ADYoungDiagram::to_string() const {
  return shape.to_string() + ";A=" + join(ascents) + ";D=" + join(descents);
}

std::vector<Step> ADYoungDiagram::steps() const {
  const int n = size();
  std::vector<Step> out(static_cast<std::size_t>(n > 0 ? n - 1 : 0),
                        Step::Free);
  for (int i : ascents) out[i - 1] = Step::Ascent;
  for (int i : descents) out[i - 1] = Step::Descent;
  return out;
}

bool is_x_alternating(const ADYoungDiagram& y, int x) {
  return windowed_alternating(y, 1, x);
}

bool is_x_semialternating(const ADYoungDiagram& y, int x) {
  return windowed_alternating(y, 2, x);
}

bool is_valid_transversal(const ADYoungDiagram& y, const Transversal& t) {
  if (!is_transversal_of(y.shape, t)) return false;
  for (int i : y.ascents) {
    if (!(t[i - 1] < t[i])) return false;
  }
  for (int i : y.descents) {
    if (!(t[i - 1] > t[i])) return false;
  }
  return true;
}

void for_each_valid_transversal(
    const ADYoungDiagram& y,
    const std::function<void(const Transversal&)>& visit) {
  for_each_leaf(diagram_spec(y, nullptr), [&](std::span<const int> w) {
    visit(Transversal(std::vector<int>(w.begin(), w.end())));
  });
}

std::vector<Transversal> valid_transversals(const ADYoungDiagram& y) {
  std::vector<Transversal> out;
  for_each_valid_transversal(y,
                             [&](const Transversal& t) { out.push_back(t); });
  return out;
}

std::uint64_t count_valid_transversals(const ADYoungDiagram& y) {
  return count_serial(diagram_spec(y, nullptr));
}

bool transversal_contains(const YoungDiagram& y, const Transversal& t,
                          const Permutation& m) {
  if (m.empty()) return true;
  const PatternMatcher matcher(m);
  const auto cols = t.entries();
  for (int i = m.size() - 1; i < t.size(); ++i) {
    if (matcher.occurs_ending_at_last(cols.first(static_cast<std::size_t>(i) + 1),
                                      y.row(i) - 1)) {
      return true;
    }
  }
  return false;
}

std::uint64_t count_avoiding_transversals(const ADYoungDiagram& y,
                                          const Permutation& m) {
  if (m.empty()) return 0;
  const PatternMatcher matcher(m);
  return count_serial(diagram_spec(y, &matcher));
}

std::vector<Transversal> avoiding_transversals(const ADYoungDiagram& y,
                                               const Permutation& m) {
  std::vector<Transversal> out;
  if (m.empty()) return out;
  const PatternMatcher matcher(m);
  for_each_leaf(diagram_spec(y, &matcher), [&](std::span<const int> w) {
    out.emplace_back(std::vector<int>(w.begin(), w.end()));
  });
  return out;
}

std::optional<Transversal> j2_canonical_transversal(const ADYoungDiagram& y) {
  if (!y.descents.empty()) {
    throw std::invalid_argument("canonical J2 avoider needs D empty");
  }
  const int n = y.size();
  std::vector<int> cols(static_cast<std::size_t>(n), -1);
  for (int c = n - 1; c >= 0; --c) {
    int pick = -1;
    for (int r = n - 1; r >= 0 && pick < 0; --r) {
      if (cols[r] < 0 && y.shape.row(r) > c) pick = r;
    }
    if (pick < 0) return std::nullopt;
    cols[pick] = c;
  }
  return Transversal(cols);
}

std::uint64_t shape2_count_i2(const ADYoungDiagram& y) {
  return y.shape.contains_staircase() && y.ascents.empty() ? 1 : 0;
}

std::uint64_t shape2_count_j2(const ADYoungDiagram& y) {
  return y.shape.contains_staircase() && y.descents.empty() ? 1 : 0;
}

void for_each_young_diagram(
    int n, const std::function<void(const YoungDiagram&)>& visit) {
  if (n < 0) return;
  if (n == 0) {
    visit(YoungDiagram());
    return;
  }
  std::vector<int> rows(static_cast<std::size_t>(n));
  rows[0] = n;
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      visit(YoungDiagram(rows));
      return;
    }
    for (int len = rows[i - 1]; len >= 1; --len) {
      rows[i] = len;
      rec(i + 1);
    }
  };
  rec(1);
}

void for_each_ad_young(int max_rows,
                       const std::function<void(const ADYoungDiagram&)>& visit,
                       bool relaxed) {
  for (int n = 1; n <= max_rows; ++n) {
    for_each_young_diagram(n, [&](const YoungDiagram& y) {
      std::vector<int> eligible;
      for (int i = 1; i <= n - 1; ++i) {
        if (relaxed || y.row(i - 1) == y.row(i)) eligible.push_back(i);
      }
      std::vector<int> choice(eligible.size(), 0);  // 0 none, 1 A, 2 D
      for (;;) {
        ADYoungDiagram ady{y, {}, {}};
        for (std::size_t j = 0; j < eligible.size(); ++j) {
          if (choice[j] == 1) ady.ascents.insert(eligible[j]);
          if (choice[j] == 2) ady.descents.insert(eligible[j]);
        }
        visit(ady);
        std::size_t j = 0;
        while (j < choice.size() && choice[j] == 2) choice[j++] = 0;
        if (j == choice.size()) break;
        ++choice[j];
      }
    });
  }
}

}  // namespace altperm
