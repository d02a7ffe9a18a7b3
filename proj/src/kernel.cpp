#include "altperm/kernel.hpp"

#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace altperm {

namespace {

struct Frame {
  int w[kMaxSearchLength];
  std::uint32_t used = 0;
};

inline bool admissible(const SearchSpec& spec, const Frame& f, int depth,
                       int v) {
  if (v > spec.caps[depth] || (f.used >> v) & 1u) return false;
  if (depth > 0) {
    const Step s = spec.steps[depth - 1];
    if (s == Step::Ascent && !(f.w[depth - 1] < v)) return false;
    if (s == Step::Descent && !(f.w[depth - 1] > v)) return false;
  }
  return true;
}

// Places v at `depth` and reports whether the branch survives the pattern
// check.
inline bool place(const SearchSpec& spec, Frame& f, int depth, int v) {
  f.w[depth] = v;
  if (spec.avoid != nullptr &&
      spec.avoid->occurs_ending_at_last(std::span<const int>(f.w, depth + 1),
                                        spec.caps[depth])) {
    return false;
  }
  f.used |= 1u << v;
  return true;
}

template <typename Leaf>
void descend(const SearchSpec& spec, Frame& f, int depth, Leaf& leaf) {
  if (depth == spec.n) {
    leaf(f);
    return;
  }
  const int top = spec.caps[depth];
  for (int v = 0; v <= top; ++v) {
    if (!admissible(spec, f, depth, v)) continue;
    if (!place(spec, f, depth, v)) continue;
    descend(spec, f, depth + 1, leaf);
    f.used &= ~(1u << v);
  }
}

void check(const SearchSpec& spec) {
  if (spec.n > kMaxSearchLength) {
    throw std::invalid_argument("search length exceeds 20");
  }
  if (spec.n >= 0 && (static_cast<int>(spec.caps.size()) != spec.n ||
                      static_cast<int>(spec.steps.size()) !=
                          (spec.n > 0 ? spec.n - 1 : 0))) {
    throw std::invalid_argument("malformed search spec");
  }
}

}  // namespace

SearchSpec SearchSpec::for_class(const PermClass& cls, int n,
                                 const PatternMatcher* avoid) {
  SearchSpec spec;
  if (n < 0) throw std::invalid_argument("negative length");
  if (!cls.steps(n, spec.steps)) {
    spec.n = -1;
    spec.steps.clear();
    return spec;
  }
  spec.n = n;
  spec.caps.assign(static_cast<std::size_t>(n), n - 1);
  spec.avoid = avoid;
  return spec;
}

std::uint64_t count_serial(const SearchSpec& spec) {
  check(spec);
  if (spec.n < 0) return 0;
  std::uint64_t total = 0;
  Frame f;
  auto leaf = [&](const Frame&) { ++total; };
  descend(spec, f, 0, leaf);
  return total;
}

std::uint64_t count_parallel(const SearchSpec& spec, int split_depth) {
  check(spec);
  if (spec.n < 0) return 0;
  if (split_depth > spec.n) split_depth = spec.n;
  if (split_depth <= 0) return count_serial(spec);

  // Collect the surviving prefixes serially.
  std::vector<Frame> prefixes;
  {
    SearchSpec head = spec;
    head.n = split_depth;
    Frame f;
    auto leaf = [&](const Frame& g) { prefixes.push_back(g); };
    descend(head, f, 0, leaf);
  }

  const long long count = static_cast<long long>(prefixes.size());
  std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : total)
  for (long long i = 0; i < count; ++i) {
    Frame f = prefixes[static_cast<std::size_t>(i)];
    std::uint64_t local = 0;
    auto leaf = [&](const Frame&) { ++local; };
    descend(spec, f, split_depth, leaf);
    total += local;
  }
  return total;
}

void for_each_leaf(const SearchSpec& spec,
                   const std::function<void(std::span<const int>)>& visit) {
  check(spec);
  if (spec.n < 0) return;
  Frame f;
  auto leaf = [&](const Frame& g) {
    visit(std::span<const int>(g.w, static_cast<std::size_t>(spec.n)));
  };
  descend(spec, f, 0, leaf);
}

}  // namespace altperm
