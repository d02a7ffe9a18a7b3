#include "altperm/descent_type.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace altperm {

namespace {

// 1-based access.
int at(const Permutation& p, int i) { return p[i - 1] + 1; }

bool is_identity(const Permutation& q) {
  for (int i = 0; i < q.size(); ++i) {
    if (q[i] != i) return false;
  }
  return true;
}

void require_member(const Permutation& p, int k) {
  if (!has_descent_type(p, k)) {
    throw std::invalid_argument("permutation lacks descent type " +
                                std::to_string(k));
  }
}

Permutation remove_position(const Permutation& p, int pos, int count = 1) {
  std::vector<int> vals;
  for (int i = 1; i <= p.size(); ++i) {
    if (i < pos || i >= pos + count) vals.push_back(p[i - 1]);
  }
  return Permutation::standardize(vals);
}

const Permutation k321 = Permutation::parse("321");

struct RepetitiveSetup {
  int b = 0;
  int t = 0;
  int m = 0;
  int x = 0;
};

RepetitiveSetup repetitive_setup(const Permutation& q, int k,
                                 const Permutation& p, bool forward) {
  RepetitiveSetup r;
  r.b = q.size();
  const auto t = repetitive_form(q);
  if (!t || r.b < 3) {
    throw std::invalid_argument("pattern is not repetitive of length >= 3");
  }
  r.t = *t;
  if (k < r.b - 1) throw std::invalid_argument("k is below b - 1");
  require_member(p, k);
  if (contains(p, q)) throw std::invalid_argument("permutation contains q");
  const int n = p.size();
  r.m = n / k;
  r.x = n % k;
  if (forward) {
    if (r.x < r.b - 2 || r.x > k - 1) {
      throw std::invalid_argument("length outside the forward range");
    }
  } else {
    if (r.x == 0 && r.m > 0) {
      --r.m;
      r.x = k;
    }
    if (r.x < r.b - 1 || r.x > k) {
      throw std::invalid_argument("length outside the backward range");
    }
  }
  return r;
}

}  // namespace

bool has_descent_type(const Permutation& p, int k) {
  return k >= 1 && class_member(p, PermClass::descent_type(k));
}

Permutation inject(int v, const Permutation& p, int k) {
  require_member(p, k);
  const int n = p.size();
  if (v < 1 || v > n + 1) throw std::invalid_argument("value out of range");
  std::vector<int> w;
  for (int i = 1; i <= n; ++i) {
    const int x = at(p, i);
    w.push_back(x >= v ? x + 1 : x);
  }
  w.push_back(v);
  if (n % k != 0) {
    std::sort(w.begin() + (n / k) * k, w.end());
  } else if (n > 0 && v > at(p, n)) {
    std::swap(w[n - 1], w[n]);
  }
  return Permutation::from_one_based(w);
}

ConsecutiveBlock block_ending_at(const Permutation& p, int end) {
  if (end < 1 || end > p.size()) {
    throw std::invalid_argument("block end outside the permutation");
  }
  int start = end;
  while (start > 1 && at(p, start - 1) + 1 == at(p, start)) --start;
  return {start, end - start + 1, at(p, end)};
}

int block_function(const Permutation& q) {
  const int b = q.size();
  if (b == 0 || at(q, b) != b) {
    throw std::invalid_argument("block function needs q_b = b");
  }
  return block_ending_at(q, b).length;
}

bool child_excluded(const Permutation& q, int k) {
  if (q.size() <= 2) return true;
  return is_identity(q) && q.size() <= k;
}

InjectionPlan child_plan(const Permutation& p, const Permutation& q, int k) {
  if (child_excluded(q, k)) throw std::invalid_argument("excluded pattern");
  require_member(p, k);
  const int n = p.size(), b = q.size();
  if (n < k) throw std::invalid_argument("length below k");
  const int m = n / k, s = n % k;
  if (at(q, b) == b) {
    const int big_b = block_function(q);
    if (s < big_b) return {1, "q_b=b, s<B: inject 1"};
    return {at(p, n - big_b + 1), "q_b=b, s>=B: inject p_{n-B+1}"};
  }
  if (s > 0) return {n + 1, "q_b!=b, 0<s<k: inject n+1"};
  if (at(q, b) == 1) {
    if (at(q, b - 1) == 2) return {n + 1, "n=km, q_b=1, q_{b-1}=2: inject n+1"};
    return {at(p, k * m), "n=km, q_b=1, q_{b-1}!=2: inject p_km"};
  }
  return {1, "n=km, q_b!=1: inject 1"};
}

Permutation child(const Permutation& p, const Permutation& q, int k) {
  return inject(child_plan(p, q, k).value, p, k);
}

bool is_repetitive(const Permutation& q) {
  for (const char* bad : {"321", "132", "231"}) {
    if (contains(q, Permutation::parse(bad))) return false;
  }
  return true;
}

std::optional<int> repetitive_form(const Permutation& q) {
  const int b = q.size();
  if (b < 2) return std::nullopt;
  const int t = at(q, 1);
  if (t < 2) return std::nullopt;
  std::vector<int> want{t};
  for (int v = 1; v <= b; ++v) {
    if (v != t) want.push_back(v);
  }
  if (q.one_based() != want) return std::nullopt;
  return t;
}

Permutation repetitive_forward(const Permutation& q, int k,
                               const Permutation& p) {
  const auto r = repetitive_setup(q, k, p, true);
  const int n = p.size();
  if (r.t == r.b) return inject(n + 1, p, k);
  return inject(at(p, k * r.m + (r.x + r.t - r.b + 1)) + 1, p, k);
}

Permutation repetitive_backward(const Permutation& q, int k,
                                const Permutation& p) {
  const auto r = repetitive_setup(q, k, p, false);
  const int base = k * r.m;
  if (r.t == r.b) {
    if (at(p, base + r.x) != base + r.x) {
      throw std::logic_error("last entry is not the maximum");
    }
    return remove_position(p, base + r.x);
  }
  const int pos = base + (r.x + r.t - r.b + 1);
  if (at(p, pos) != at(p, pos - 1) + 1) {
    throw std::logic_error("forced entries are not adjacent values");
  }
  return remove_position(p, pos);
}

Permutation block321_forward(const Permutation& p, int k) {
  require_member(p, k);
  if (contains(p, k321)) throw std::invalid_argument("permutation contains 321");
  const int i = p.size();
  if (k < 2 || i < 2 || (i - 1) % k == 0) {
    throw std::invalid_argument("length outside the block range");
  }
  const int m = (i - 1) / k + 1;
  if (m < 2) throw std::invalid_argument("need at least two rows");
  std::vector<int> w;
  for (int j = 1; j < i; ++j) w.push_back(at(p, j));
  for (int v = i + 1; v <= k * m + 1; ++v) w.push_back(v);
  w.push_back(at(p, i));
  return Permutation::from_one_based(w);
}

Permutation block321_backward(const Permutation& p, int k) {
  require_member(p, k);
  if (contains(p, k321)) throw std::invalid_argument("permutation contains 321");
  const int n = p.size();
  if (k < 2 || n % k != 1 || n / k < 2) {
    throw std::invalid_argument("length is not km + 1 with m >= 2");
  }
  const int km = n - 1;
  if (at(p, km) != n) throw std::logic_error("p_km is not the maximum");
  const auto blk = block_ending_at(p, km);
  return remove_position(p, blk.start, blk.length);
}

bool strict_growth_asserted(const Permutation& q, int k, int n) {
  if (k < 1 || n < k || q.size() < 3) return false;
  if (is_identity(q) && q.size() <= k) return false;
  if (n % k != 0) return !is_repetitive(q);
  if (q.size() >= 4) return true;
  for (const char* s : {k == 2 ? "123" : "321", "213", "312"}) {
    if (contains(q, Permutation::parse(s))) return true;
  }
  return false;
}

std::optional<int> secondary_injection_value(const Permutation& p,
                                             const Permutation& q, int k) {
  const int n = p.size();
  if (n == 0 || n % k != 0) return std::nullopt;
  const int last = at(p, n);  // p_km
  const std::string s = q.to_string();
  if (s == "4321" || s == "3421") return last != n ? n : n - 1;
  if (s == "1432" || s == "2431") return n + 1;
  if (s == "1234" || s == "1243") return 2;
  if (s == "1342") return last;
  if (s == "2341") return last == n ? n - 1 : last + 2;
  return std::nullopt;
}

}  // namespace altperm
