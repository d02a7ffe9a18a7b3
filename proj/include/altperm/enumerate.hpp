// Exhaustive generation of permutation classes and avoidance counting.

#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "altperm/permutation.hpp"

namespace altperm {

class CountCache;

struct AvoidanceQuery {
  Permutation pattern;
  PermClass cls = PermClass::all();
  int n = 0;

  // Canonical text key, e.g. "634521|alt|8".
  std::string key() const;
};

struct CountResult {
  AvoidanceQuery query;
  std::uint64_t count = 0;
  std::chrono::nanoseconds elapsed{0};
  bool cached = false;
};

// Members of `cls` of length n in lexicographic order of one-line notation.
void for_each_member(const PermClass& cls, int n,
                     const std::function<void(const Permutation&)>& visit);
std::vector<Permutation> generate(const PermClass& cls, int n);
std::uint64_t class_size(const PermClass& cls, int n);

// Prefix-pruned avoidance counts.  The serial version is the reference the
// parallel one is tested against.
std::uint64_t count_avoiders_serial(const Permutation& pattern,
                                    const PermClass& cls, int n);
std::uint64_t count_avoiders_parallel(const Permutation& pattern,
                                      const PermClass& cls, int n);

// Parallel count with timing; consults and fills `cache` when given.
CountResult count_avoiders(const AvoidanceQuery& query,
                           CountCache* cache = nullptr);

// Members of `cls` of length n avoiding `pattern`, lexicographic order.
std::vector<Permutation> avoiders(const Permutation& pattern,
                                  const PermClass& cls, int n);

// Counts for n = 1..n_max.
std::vector<std::uint64_t> sequence(const Permutation& pattern,
                                    const PermClass& cls, int n_max,
                                    CountCache* cache = nullptr);

}  // namespace altperm
