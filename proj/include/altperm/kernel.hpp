// Depth-first placement kernel shared by permutation-class enumeration and
// transversal enumeration.
//
// Positions (rows) are filled left to right with distinct values (columns)
// drawn from 0..n-1.  Position i may only take values <= caps[i], the pair
// (i, i+1) must obey steps[i], and when a pattern is supplied a branch is
// cut as soon as the newest entry completes an occurrence of it.  The cap of
// the newest position also bounds every other entry of that occurrence,
// which is the corner condition for transversals of a Young diagram; for
// plain permutations all caps are n-1 and the condition is vacuous.

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "altperm/permutation.hpp"

namespace altperm {

inline constexpr int kMaxSearchLength = 20;

struct SearchSpec {
  int n = 0;
  std::vector<Step> steps;  // size max(n-1, 0)
  std::vector<int> caps;    // size n; inclusive 0-based value bound
  const PatternMatcher* avoid = nullptr;

  // Permutations of length n in `cls`.  Returns a spec with n = -1 when the
  // class is empty at this length.
  static SearchSpec for_class(const PermClass& cls, int n,
                              const PatternMatcher* avoid = nullptr);
};

// Reference implementation: single-threaded depth-first count.
std::uint64_t count_serial(const SearchSpec& spec);

// Same count with the search forest split into prefixes of length
// `split_depth` and the subtrees distributed over OpenMP threads.  The
// result does not depend on the schedule.
std::uint64_t count_parallel(const SearchSpec& spec, int split_depth = 2);

// Visits every leaf in lexicographic order.  The span passed to `visit` is
// only valid during the call.
void for_each_leaf(const SearchSpec& spec,
                   const std::function<void(std::span<const int>)>& visit);

}  // namespace altperm
