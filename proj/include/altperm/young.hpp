// Young diagrams with required ascent/descent sets and their transversals.
//
// Rows and columns are 0-based in code; the ascent and descent index sets
// A and D keep the 1-based convention of their text form, so index i
// relates rows i-1 and i (0-based).  A transversal is stored as the
// permutation of its columns read row by row.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "altperm/permutation.hpp"

namespace altperm {

class YoungDiagram {
 public:
  YoungDiagram() = default;

  // Row lengths, weakly decreasing, each >= 1, with as many rows as the
  // first row is long.  Throws std::invalid_argument otherwise.
  explicit YoungDiagram(std::vector<int> rows);

  static YoungDiagram square(int n);
  static YoungDiagram staircase(int n);
  static YoungDiagram parse(std::string_view text);  // "4,4,2,2"

  int size() const { return static_cast<int>(rows_.size()); }
  bool empty() const { return rows_.empty(); }
  int row(int i) const { return rows_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& rows() const { return rows_; }
  bool contains_square(int i, int j) const {
    return i >= 0 && i < size() && j >= 0 && j < row(i);
  }
  // Row i is at least n - i long for every i.
  bool contains_staircase() const;

  std::string to_string() const;

  friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;

 private:
  std::vector<int> rows_;
};

using Transversal = Permutation;

bool is_transversal_of(const YoungDiagram& y, const Transversal& t);

bool is_ad_young(const YoungDiagram& y, const std::set<int>& a,
                 const std::set<int>& d);

struct ADYoungDiagram {
  YoungDiagram shape;
  std::set<int> ascents;   // A, 1-based
  std::set<int> descents;  // D, 1-based

  // Checks is_ad_young and throws when it fails.  With relaxed = true only
  // the equal-row-length condition is waived.
  static ADYoungDiagram make(YoungDiagram y, std::set<int> a, std::set<int> d,
                             bool relaxed = false);

  // n x n square whose valid transversals are exactly the members of `cls`
  // of length n (n = 0 gives the empty diagram).  Throws for classes that
  // are empty at this length.
  static ADYoungDiagram for_class(const PermClass& cls, int n);

  // "4,4,2,2;A=;D=3".  Parsing is relaxed; callers check is_ad_young.
  static ADYoungDiagram parse(std::string_view text);
  std::string to_string() const;

  int size() const { return shape.size(); }
  bool well_formed() const { return is_ad_young(shape, ascents, descents); }

  // Per-step constraints for the search kernel.
  std::vector<Step> steps() const;

  friend bool operator==(const ADYoungDiagram&,
                         const ADYoungDiagram&) = default;
};

// (1,x)- and (2,x)-alternating: for every index i with
// w - 1 <= i <= n - x (w = 1 resp. 2), i is in A exactly when i + 1 is in D.
bool is_x_alternating(const ADYoungDiagram& y, int x);
bool is_x_semialternating(const ADYoungDiagram& y, int x);

bool is_valid_transversal(const ADYoungDiagram& y, const Transversal& t);

// Valid transversals in lexicographic order of their column words.
void for_each_valid_transversal(
    const ADYoungDiagram& y, const std::function<void(const Transversal&)>& visit);
std::vector<Transversal> valid_transversals(const ADYoungDiagram& y);
std::uint64_t count_valid_transversals(const ADYoungDiagram& y);

// Rows a_1 < ... < a_r and columns b_1 < ... < b_r carrying a copy of m,
// with the square (a_r, b_r) inside y.
bool transversal_contains(const YoungDiagram& y, const Transversal& t,
                          const Permutation& m);

// |S_Y(M)|.  An empty pattern is contained in everything, so the count is
// then 0; the empty diagram has one (empty) transversal.
std::uint64_t count_avoiding_transversals(const ADYoungDiagram& y,
                                          const Permutation& m);
std::vector<Transversal> avoiding_transversals(const ADYoungDiagram& y,
                                               const Permutation& m);

// Right to left over columns, each column takes the lowest free row that
// reaches it.  Absent when some column finds no row.  Requires D empty.
std::optional<Transversal> j2_canonical_transversal(const ADYoungDiagram& y);

// Closed form for |S_Y(I_2)| and |S_Y(J_2)| on AD-Young diagrams.
std::uint64_t shape2_count_i2(const ADYoungDiagram& y);
std::uint64_t shape2_count_j2(const ADYoungDiagram& y);

// Every Young diagram with n rows, in reverse lexicographic order of the
// row lengths.
void for_each_young_diagram(int n,
                            const std::function<void(const YoungDiagram&)>& visit);

// Every AD-Young diagram with 1..max_rows rows; A and D range over the
// indices whose two rows have equal length.  With relaxed = true every
// index in [n-1] is eligible.
void for_each_ad_young(int max_rows,
                       const std::function<void(const ADYoungDiagram&)>& visit,
                       bool relaxed = false);

}  // namespace altperm
