// Independent brute-force references used by the test suites.  Nothing in
// here calls into the search kernel.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "altperm/permutation.hpp"

namespace oracle {

using altperm::Permutation;

inline std::vector<Permutation> all_perms(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

// Every size-|q| subsequence of w, standardized and compared.
inline bool naive_contains(const Permutation& w, const Permutation& q) {
  const int n = w.size(), m = q.size();
  if (m == 0) return true;
  if (m > n) return false;
  std::vector<int> idx(static_cast<std::size_t>(m));
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    bool ok = true;
    for (int a = 0; a < m && ok; ++a) {
      for (int b = a + 1; b < m && ok; ++b) {
        ok = (w[idx[a]] < w[idx[b]]) == (q[a] < q[b]);
      }
    }
    if (ok) return true;
    int i = m - 1;
    while (i >= 0 && idx[i] == n - m + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline bool is_alternating(const Permutation& w) {
  for (int i = 0; i + 1 < w.size(); ++i) {
    if ((i % 2 == 0) != (w[i] < w[i + 1])) return false;
  }
  return true;
}

inline bool has_descent_type(const Permutation& w, int k) {
  for (int i = 0; i + 1 < w.size(); ++i) {
    if (((i + 1) % k == 0) != (w[i] > w[i + 1])) return false;
  }
  return true;
}

inline std::uint64_t filter_count(
    int n, const std::function<bool(const Permutation&)>& member,
    const Permutation& q) {
  std::uint64_t c = 0;
  for (const auto& w : all_perms(n)) {
    if (member(w) && !naive_contains(w, q)) ++c;
  }
  return c;
}

// Shortest alternating permutation containing p, decided without building
// any permutation: choose the positions that carry p inside a word of
// length L and ask whether the alternation constraints together with the
// order of p are acyclic.
inline int min_alternating_container_length(const Permutation& p) {
  const int k = p.size();
  for (int len = k;; ++len) {
    std::vector<int> pos(static_cast<std::size_t>(k));
    std::iota(pos.begin(), pos.end(), 0);
    for (;;) {
      // less[a][b]: w_a < w_b forced.
      std::vector<std::vector<char>> less(
          static_cast<std::size_t>(len),
          std::vector<char>(static_cast<std::size_t>(len), 0));
      for (int i = 0; i + 1 < len; ++i) {
        if (i % 2 == 0) less[i][i + 1] = 1;
        else less[i + 1][i] = 1;
      }
      for (int a = 0; a < k; ++a) {
        for (int b = 0; b < k; ++b) {
          if (p[a] < p[b]) less[pos[a]][pos[b]] = 1;
        }
      }
      for (int m = 0; m < len; ++m) {
        for (int a = 0; a < len; ++a) {
          if (!less[a][m]) continue;
          for (int b = 0; b < len; ++b) {
            if (less[m][b]) less[a][b] = 1;
          }
        }
      }
      bool acyclic = true;
      for (int a = 0; a < len; ++a) acyclic = acyclic && !less[a][a];
      if (acyclic) return len;
      int i = k - 1;
      while (i >= 0 && pos[i] == len - k + i) --i;
      if (i < 0) break;
      ++pos[i];
      for (int j = i + 1; j < k; ++j) pos[j] = pos[j - 1] + 1;
    }
  }
}

}  // namespace oracle
