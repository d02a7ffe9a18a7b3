#include "altperm/extension.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace altperm {

namespace {

// Copy of c among the elements of t in rows > a and columns > b, with the
// last chosen row reaching the largest chosen column.
bool southeast_contains(const YoungDiagram& y, const Transversal& t,
                        const PatternMatcher& m, int a, int b) {
  if (m.length() == 0) return true;
  std::vector<int> cols;
  std::vector<int> rows;
  for (int i = a + 1; i < t.size(); ++i) {
    if (t[i] > b) {
      cols.push_back(t[i]);
      rows.push_back(i);
    }
  }
  for (std::size_t j = static_cast<std::size_t>(m.length()) - 1;
       j < cols.size(); ++j) {
    if (m.occurs_ending_at_last(std::span<const int>(cols).first(j + 1),
                                y.row(rows[j]) - 1)) {
      return true;
    }
  }
  return false;
}

}  // namespace

bool DominantRegion::is_young_shaped(const YoungDiagram& parent) const {
  if (static_cast<int>(rows.size()) != parent.size()) return false;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] < 0 || rows[i] > parent.row(static_cast<int>(i))) return false;
    if (i > 0 && rows[i] > rows[i - 1]) return false;
  }
  return true;
}

bool is_dominant(const YoungDiagram& y, const Transversal& t,
                 const Permutation& c, int a, int b) {
  if (!y.contains_square(a, b)) return false;
  return southeast_contains(y, t, PatternMatcher(c), a, b);
}

DominantRegion dominant_region(const YoungDiagram& y, const Transversal& t,
                               const Permutation& c) {
  const PatternMatcher m(c);
  DominantRegion out;
  out.rows.assign(static_cast<std::size_t>(y.size()), 0);
  for (int a = 0; a < y.size(); ++a) {
    int len = 0;
    while (len < y.row(a) && southeast_contains(y, t, m, a, len)) ++len;
    out.rows[a] = len;
  }
  return out;
}

std::vector<Cell> nondominant_set(const YoungDiagram& y, const Transversal& t,
                                  const Permutation& c) {
  const auto region = dominant_region(y, t, c);
  std::vector<Cell> out;
  for (int i = 0; i < t.size(); ++i) {
    if (!region.contains(i, t[i])) out.emplace_back(i, t[i]);
  }
  return out;
}

SuccessorDiagram successor(const ADYoungDiagram& y, const Transversal& t,
                           const Permutation& c) {
  const int n = y.size();
  const auto region = dominant_region(y.shape, t, c);
  std::vector<char> drop_row(static_cast<std::size_t>(n), 0);
  std::vector<char> drop_col(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    if (!region.contains(i, t[i])) {
      drop_row[i] = 1;
      drop_col[t[i]] = 1;
    }
  }
  SuccessorDiagram s;
  for (int i = 0; i < n; ++i) {
    if (!drop_row[i]) s.row_map.push_back(i);
    if (!drop_col[i]) s.col_map.push_back(i);
  }
  std::vector<int> rows;
  for (int r : s.row_map) {
    const auto reach = std::lower_bound(s.col_map.begin(), s.col_map.end(),
                                        region.rows[r]);
    rows.push_back(static_cast<int>(reach - s.col_map.begin()));
  }
  std::set<int> a, d;
  const int k = static_cast<int>(s.row_map.size());
  for (int i = 0; i + 1 < k; ++i) {
    if (s.row_map[i + 1] != s.row_map[i] + 1) continue;
    if (y.ascents.count(s.row_map[i] + 1)) a.insert(i + 1);
    if (y.descents.count(s.row_map[i] + 1)) d.insert(i + 1);
  }
  s.diagram = ADYoungDiagram::make(YoungDiagram(std::move(rows)), std::move(a),
                                   std::move(d), /*relaxed=*/true);
  return s;
}

Transversal deletion_image(const SuccessorDiagram& s, const Transversal& t) {
  std::vector<int> cols;
  for (int r : s.row_map) {
    const auto it = std::lower_bound(s.col_map.begin(), s.col_map.end(), t[r]);
    if (it == s.col_map.end() || *it != t[r]) {
      throw std::invalid_argument("kept row holds a deleted column");
    }
    cols.push_back(static_cast<int>(it - s.col_map.begin()));
  }
  return Transversal(cols);
}

Transversal reinsert(const ADYoungDiagram& y, const std::vector<Cell>& n,
                     const SuccessorDiagram& s, const Transversal& t_prime) {
  const int size = y.size();
  if (t_prime.size() != static_cast<int>(s.row_map.size())) {
    throw std::invalid_argument("transversal does not fit the successor");
  }
  std::vector<int> cols(static_cast<std::size_t>(size), -1);
  for (const auto& [r, col] : n) {
    if (r < 0 || r >= size) throw std::invalid_argument("cell outside Y");
    cols[r] = col;
  }
  for (int i = 0; i < t_prime.size(); ++i) {
    const int r = s.row_map[i];
    if (cols[r] >= 0) throw std::invalid_argument("row used twice");
    cols[r] = s.col_map[t_prime[i]];
  }
  std::vector<char> seen(static_cast<std::size_t>(size), 0);
  for (int i = 0; i < size; ++i) {
    if (cols[i] < 0 || cols[i] >= size || seen[cols[i]] ||
        !y.shape.contains_square(i, cols[i])) {
      throw std::invalid_argument("reinsertion is not a transversal");
    }
    seen[cols[i]] = 1;
  }
  return Transversal(cols);
}

std::vector<NondominantFamily> realizable_nondominant_sets(
    const ADYoungDiagram& y, const Permutation& c) {
  std::map<std::vector<Cell>, std::size_t> index;
  std::vector<NondominantFamily> out;
  for_each_valid_transversal(y, [&](const Transversal& t) {
    auto cells = nondominant_set(y.shape, t, c);
    if (index.emplace(cells, out.size()).second) {
      out.push_back({std::move(cells), t});
    }
  });
  return out;
}

Embed2Sides embed2_sides(const ADYoungDiagram& y, const Permutation& p,
                         const Permutation& c) {
  Embed2Sides sides;
  sides.lhs = count_avoiding_transversals(y, p.direct_sum(c));
  const auto families = realizable_nondominant_sets(y, c);
  sides.families = families.size();
  for (const auto& f : families) {
    const auto s = successor(y, f.witness, c);
    sides.rhs += count_avoiding_transversals(s.diagram, p);
  }
  return sides;
}

bool verify_embed2(const ADYoungDiagram& y, const Permutation& p,
                   const Permutation& c) {
  const auto sides = embed2_sides(y, p, c);
  return sides.lhs == sides.rhs;
}

bool alt_technical_holds(const ADYoungDiagram& y, const SuccessorDiagram& s) {
  const auto& a2 = s.diagram.ascents;
  const auto& d2 = s.diagram.descents;
  for (int i : a2) {
    const int ri = s.row_map[i - 1] + 1;
    if (y.descents.count(ri + 1) && !d2.count(i + 1)) return false;
  }
  for (int i : d2) {
    const int ri = s.row_map[i - 1] + 1;
    if (y.ascents.count(ri - 1) && !a2.count(i - 1)) return false;
  }
  return true;
}

}  // namespace altperm
