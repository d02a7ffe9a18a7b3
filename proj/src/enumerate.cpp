#include "altperm/enumerate.hpp"

#include "altperm/cache.hpp"
#include "altperm/kernel.hpp"

namespace altperm {

std::string AvoidanceQuery::key() const {
  return pattern.to_string() + "|" + cls.to_string() + "|" +
         std::to_string(n);
}

void for_each_member(const PermClass& cls, int n,
                     const std::function<void(const Permutation&)>& visit) {
  const SearchSpec spec = SearchSpec::for_class(cls, n);
  for_each_leaf(spec, [&](std::span<const int> w) {
    visit(Permutation(std::vector<int>(w.begin(), w.end())));
  });
}

std::vector<Permutation> generate(const PermClass& cls, int n) {
  std::vector<Permutation> out;
  for_each_member(cls, n, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

std::uint64_t class_size(const PermClass& cls, int n) {
  return count_parallel(SearchSpec::for_class(cls, n));
}

std::uint64_t count_avoiders_serial(const Permutation& pattern,
                                    const PermClass& cls, int n) {
  if (pattern.empty()) return 0;
  const PatternMatcher m(pattern);
  return count_serial(SearchSpec::for_class(cls, n, &m));
}

std::uint64_t count_avoiders_parallel(const Permutation& pattern,
                                      const PermClass& cls, int n) {
  if (pattern.empty()) return 0;
  const PatternMatcher m(pattern);
  return count_parallel(SearchSpec::for_class(cls, n, &m));
}

CountResult count_avoiders(const AvoidanceQuery& query, CountCache* cache) {
  CountResult result;
  result.query = query;
  const auto start = std::chrono::steady_clock::now();
  if (cache != nullptr) {
    if (auto hit = cache->lookup(query.key())) {
      result.count = *hit;
      result.cached = true;
      result.elapsed = std::chrono::steady_clock::now() - start;
      return result;
    }
  }
  result.count = count_avoiders_parallel(query.pattern, query.cls, query.n);
  result.elapsed = std::chrono::steady_clock::now() - start;
  if (cache != nullptr) cache->store(query.key(), result.count);
  return result;
}

std::vector<Permutation> avoiders(const Permutation& pattern,
                                  const PermClass& cls, int n) {
  std::vector<Permutation> out;
  const PatternMatcher m(pattern);
  const SearchSpec spec = SearchSpec::for_class(cls, n, &m);
  for_each_leaf(spec, [&](std::span<const int> w) {
    out.emplace_back(std::vector<int>(w.begin(), w.end()));
  });
  return out;
}

std::vector<std::uint64_t> sequence(const Permutation& pattern,
                                    const PermClass& cls, int n_max,
                                    CountCache* cache) {
  std::vector<std::uint64_t> out;
  for (int n = 1; n <= n_max; ++n) {
    out.push_back(count_avoiders({pattern, cls, n}, cache).count);
  }
  return out;
}

}  // namespace altperm
