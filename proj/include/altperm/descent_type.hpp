// Injections and small bijections between D^k_n(q) and D^k_{n+1}(q).
//
// Values and positions passed in or returned here are 1-based (v = 1 is the
// smallest value, position km is the last cell of the m-th row); the
// permutations themselves are ordinary 0-based Permutation objects.
// Rows are the position blocks [(j-1)k + 1, jk].

#pragma once

#include <optional>
#include <string>

#include "altperm/permutation.hpp"

namespace altperm {

bool has_descent_type(const Permutation& p, int k);

// Increment the values >= v, append v, then repair the final row.
// Throws std::invalid_argument when p lacks descent type k or v is not in
// [1, n + 1].
Permutation inject(int v, const Permutation& p, int k);

// Cells start .. start + length - 1 (1-based) consecutive in position and
// in value, ending with value `anchor`.
struct ConsecutiveBlock {
  int start = 0;
  int length = 0;
  int anchor = 0;
};

// Longest block ending at position `end` (1-based).
ConsecutiveBlock block_ending_at(const Permutation& p, int end);

// Length of the block anchored at q_b.  Throws std::invalid_argument unless
// q_b = b.
int block_function(const Permutation& q);

// 1, 12, 21 and identities of length <= k, for which no child map exists.
bool child_excluded(const Permutation& q, int k);

struct InjectionPlan {
  int value = 0;
  std::string rule;
};

// The branch of the child map for p (length n >= k).  Throws
// std::invalid_argument for excluded q, n < k, or p outside D^k_n.
InjectionPlan child_plan(const Permutation& p, const Permutation& q, int k);
Permutation child(const Permutation& p, const Permutation& q, int k);

// Avoids 321, 132 and 231.
bool is_repetitive(const Permutation& q);
// t when q = t,1,2,...,t-1,t+1,...,b with t >= 2; absent otherwise.
std::optional<int> repetitive_form(const Permutation& q);

// For repetitive non-identity q of length b >= 3 and k >= b - 1.
// forward: p of length km + x with b - 2 <= x <= k - 1.
// backward: p of length km + x with b - 1 <= x <= k.
// Both throw std::invalid_argument on range violations or when p is not in
// D^k_n(q).
Permutation repetitive_forward(const Permutation& q, int k,
                               const Permutation& p);
Permutation repetitive_backward(const Permutation& q, int k,
                                const Permutation& p);

// forward: p in D^k_i(321) with k(m-1) + 2 <= i <= km for some m >= 2;
// the block i+1..km+1 is slotted in before the last entry.
// backward: p in D^k_{km+1}(321), m >= 2; drops the block ending at km.
Permutation block321_forward(const Permutation& p, int k);
Permutation block321_backward(const Permutation& p, int k);

// Where |D^k_n(q)| < |D^k_{n+1}(q)| is claimed: n >= k, q is not an
// identity of length <= k, and either k does not divide n and q is
// non-repetitive, or k divides n and q has length >= 4 or contains one of
// 123/213/312 (k = 2) resp. 321/213/312 (k > 2).
bool strict_growth_asserted(const Permutation& q, int k, int n);

// The second injection for n = km used by the strict case, for the eight
// length-4 patterns that have one; absent for other q.
std::optional<int> secondary_injection_value(const Permutation& p,
                                             const Permutation& q, int k);

}  // namespace altperm
