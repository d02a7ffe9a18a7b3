// Count-based classification of patterns, the 12/21 inequalities for
// descent- and ascent-set families, doubling non-equivalence and sweeps
// for the open conjectures.
//
// Equality over a finite range of lengths is only evidence; blocks are
// labelled "equal up to n_max" and never called equivalent.

#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "altperm/permutation.hpp"
#include "altperm/tables.hpp"

namespace altperm {

class CountCache;

enum class Parity { Even, Odd };

// Symmetries of the pattern set that map the class to itself at every
// length in `lengths`: reverse for odd-length (reverse) alternating,
// reverse-complement for even-length, the eight square symmetries for
// `all`, nothing else otherwise.  Always contains q; sorted, no repeats.
std::vector<Permutation> trivial_orbit(const Permutation& q,
                                       const PermClass& cls,
                                       const std::vector<int>& lengths);

struct EquivalenceBlock {
  std::vector<Permutation> patterns;    // input order
  std::vector<std::uint64_t> sequence;  // one count per length
  bool trivial = true;   // all patterns share one trivial orbit
  bool open = false;     // contains a pair listed as unsettled for S_5
};

struct EquivalenceReport {
  PermClass cls = PermClass::all();
  std::vector<int> lengths;
  std::vector<EquivalenceBlock> blocks;  // order of first appearance

  int n_max() const { return lengths.empty() ? 0 : lengths.back(); }
  // "equal up to n_max=9 (nontrivial): 1234 2134 3214", plus
  // " [open]" when flagged.
  std::string describe(const EquivalenceBlock& b) const;

  // Trivial orbits met by the block.
  int orbits(const EquivalenceBlock& b) const;
  // Sum over blocks of orbits - 1: the number of candidate nontrivial
  // equivalences the data leaves open.
  int candidate_equivalences() const;
};

// Partitions `patterns` by their count sequences over `lengths` (sorted
// ascending).  Throws std::invalid_argument on empty input.
EquivalenceReport classify(const std::vector<Permutation>& patterns,
                           const PermClass& cls, const std::vector<int>& lengths,
                           CountCache* cache = nullptr);

// {n : lo <= n <= hi, n has the given parity}.
std::vector<int> lengths_of_parity(Parity parity, int lo, int hi);

// The pairs of length-5 patterns whose equivalence is left unsettled.
bool known_open_pair(const Permutation& p, const Permutation& q,
                        Parity parity);

// Non-equivalence from shortest alternating containers.  `decided` only
// when the ceiling test separates p and q and the counts at `witness_n`
// differ.
struct NonequivalenceVerdict {
  bool decided = false;
  int witness_n = 0;
  std::uint64_t count_p = 0;
  std::uint64_t count_q = 0;
  int container_p = 0;  // k + t
  int container_q = 0;
};

NonequivalenceVerdict doubling_nonequivalence(const Permutation& p,
                                              const Permutation& q,
                                              Parity parity,
                                              CountCache* cache = nullptr);

// |C_n(12q)| against |C_n(21q)| for C a descent-set (expected <=) or
// ascent-set (expected >=) class; dk:K counts as the descent-set class with
// D = {K, 2K, ...}.  The AD-Young count of the square diagram encoding C
// is computed alongside and must agree with the direct count.
struct InequalityCheck {
  Permutation p12;
  Permutation p21;
  std::uint64_t count12 = 0;
  std::uint64_t count21 = 0;
  bool hypothesis = false;   // the set condition of the matching theorem
  bool expect_le = true;     // 12q <= 21q, otherwise >=
  bool encodings_agree = false;
  bool holds() const {
    return expect_le ? count12 <= count21 : count12 >= count21;
  }
};

// tail: the pattern q on [t] \ [2], given standardized (length t - 2).
InequalityCheck check_ineq_12_21(const Permutation& tail, const PermClass& cls,
                                 int n);

// |D^k_n((t+2)(t+1)w)| >= |D^k_n((t+1)(t+2)w)| for w in S_t.
// count12 holds the (t+1)(t+2)w side.
InequalityCheck check_ineq_complemented(const Permutation& w, int k, int n);

struct ConjectureRanges {
  int k_min = 3;
  int k_max = 4;
  int rows = 6;       // sesa
  int n_max = 9;      // decreasing and D^k
  int length = 4;     // pattern length for dk-2134 / dk-1243
  std::chrono::milliseconds budget{0};  // 0 = unlimited
};

struct ConjectureVerdict {
  enum class Status {
    NoCounterexample,
    Counterexample,
    Inconclusive,  // dk-isolated: a pair agrees on the whole range
    BudgetExceeded
  };

  std::string id;
  ConjectureRanges ranges;
  Status status = Status::NoCounterexample;
  std::string witness;   // human readable, set for a counterexample
  std::string covered;   // range fully checked, e.g. "k<=4, rows<=5"
  std::uint64_t cases = 0;

  std::string status_text() const;
};

// ids: sesa, decreasing, dk-2134, dk-1243, dk-isolated.  Throws
// std::invalid_argument for an unknown id or a range the conjecture
// excludes (sesa needs k_min > 2).
ConjectureVerdict check_conjecture(const std::string& id,
                                   const ConjectureRanges& ranges,
                                   CountCache* cache = nullptr);

// Table values recomputed for the columns with length <= max_n.  Cells
// past max_n stay empty.
struct TableReproduction {
  const ReferenceTable* table = nullptr;
  int max_n = 0;
  std::vector<std::vector<std::optional<std::uint64_t>>> computed;  // per row
  int compared = 0;    // cells with a printed value
  int mismatches = 0;  // cells off the printed value, or split within a row
  struct Split {
    std::size_t row;
    int n;
    Permutation pattern;  // first pattern of the row to leave the row's count
    std::uint64_t count;
  };
  std::vector<Split> splits;
};

TableReproduction reproduce_table(const ReferenceTable& table, int max_n,
                                  CountCache* cache = nullptr);

}  // namespace altperm
