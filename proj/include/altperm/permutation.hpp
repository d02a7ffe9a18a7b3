// Permutations in one-line notation, pattern containment, and the
// permutation classes used throughout the toolkit.
//
// Internally positions and values are 0-based: a permutation of length n
// holds each of 0..n-1 exactly once.  All text input/output is 1-based.

#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace altperm {

class Permutation {
 public:
  Permutation() = default;

  // Takes 0-based values; throws std::invalid_argument unless the values
  // are a rearrangement of 0..n-1.
  explicit Permutation(std::vector<int> entries);

  // 1-based one-line notation, e.g. from_one_based({2,1,3}).
  static Permutation from_one_based(std::span<const int> values);
  static Permutation from_one_based(std::initializer_list<int> values);
  static Permutation identity(int n);
  static Permutation decreasing(int n);

  // Standardizes any sequence of distinct integers to a permutation with
  // the same relative order.
  static Permutation standardize(std::span<const int> values);

  // Parses "35624718" (n <= 9) or "10,3,1,..." (any n).
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }
  int operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
  std::span<const int> entries() const { return entries_; }
  std::vector<int> one_based() const;

  // Digit string for n <= 9, comma separated otherwise.
  std::string to_string() const;

  Permutation complement() const;
  Permutation reverse() const;
  Permutation inverse() const;

  // Direct sum: this followed by other shifted above it.
  Permutation direct_sum(const Permutation& other) const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> entries_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& p);

// Precomputed matcher for one pattern.  Matching walks the pattern left to
// right; for each pattern index it keeps the nearest already-placed indices
// below and above it in value, so each candidate is checked in O(1).
class PatternMatcher {
 public:
  explicit PatternMatcher(const Permutation& pattern);

  const Permutation& pattern() const { return pattern_; }
  int length() const { return pattern_.size(); }

  // True iff `text` has a subsequence order-isomorphic to the pattern.
  // `text` holds distinct integers; they need not be standardized.
  bool occurs_in(std::span<const int> text) const;

  // True iff some occurrence uses text.back() as the final pattern entry.
  // Every other chosen entry must also be <= value_cap (used for the
  // corner condition of transversal containment).
  bool occurs_ending_at_last(std::span<const int> text,
                             int value_cap = INT32_MAX) const;

 private:
  struct Slot {
    int below = -1;  // pattern index of nearest smaller placed entry
    int above = -1;  // pattern index of nearest larger placed entry
  };
  bool search(std::span<const int> text, int next_pos, int idx, int limit,
              int cap, int* chosen) const;

  Permutation pattern_;
  std::vector<Slot> free_slots_;  // neighbours among indices < idx
  std::vector<Slot> tail_slots_;  // neighbours among indices < idx or last
};

// contains(w, q); contains(w, empty) is true.
bool contains(const Permutation& w, const Permutation& q);

// Required relation between w_i and w_{i+1} (0-based i).
enum class Step : std::uint8_t { Free, Ascent, Descent };

class PermClass {
 public:
  enum class Kind : std::uint8_t {
    All,
    Alternating,
    ReverseAlternating,
    DescentType,
    DescentSet,
    AscentSet
  };

  static PermClass all() { return PermClass(Kind::All); }
  static PermClass alternating() { return PermClass(Kind::Alternating); }
  static PermClass reverse_alternating() {
    return PermClass(Kind::ReverseAlternating);
  }
  static PermClass descent_type(int k);
  // 1-based index sets; membership means the descent (ascent) set is
  // exactly the given set.
  static PermClass descent_set(std::set<int> d);
  static PermClass ascent_set(std::set<int> a);

  // Accepts all | alt | ralt | dk:K | dset:1,3 | aset:2 (also dset: for
  // the empty set).
  static PermClass parse(std::string_view text);

  Kind kind() const { return kind_; }
  int k() const { return k_; }
  const std::set<int>& indices() const { return indices_; }

  // Per-step constraints for length n.  Returns false when the class is
  // empty at this length (an index set reaching outside [n-1]).
  bool steps(int n, std::vector<Step>& out) const;

  bool contains(const Permutation& w) const;

  std::string to_string() const;

  friend bool operator==(const PermClass&, const PermClass&) = default;

 private:
  explicit PermClass(Kind kind) : kind_(kind) {}
  Kind kind_;
  int k_ = 0;
  std::set<int> indices_;
};

bool class_member(const Permutation& w, const PermClass& c);

bool is_alternating(const Permutation& w);
bool is_reverse_alternating(const Permutation& w);

// Doubling set d(p) with sentinel p_0 = +infinity; indices are 1-based
// and lie in [n-1].
struct DoublingProfile {
  std::set<int> doubling_set;
  int doubling_number = 0;
};

DoublingProfile doubling(const Permutation& p);

// Alternating permutation of length |p| + t containing p, built by spreading
// p out and filling the gaps with small values at odd positions and large
// values at even positions.
Permutation shortest_alternating_container(const Permutation& p);

}  // namespace altperm
