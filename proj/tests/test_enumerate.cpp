#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <set>

#include "altperm/cache.hpp"
#include "altperm/enumerate.hpp"
#include "altperm/kernel.hpp"
#include "oracles.hpp"

using namespace altperm;

namespace {

std::vector<PermClass> sample_classes() {
  return {PermClass::all(),
          PermClass::alternating(),
          PermClass::reverse_alternating(),
          PermClass::descent_type(1),
          PermClass::descent_type(2),
          PermClass::descent_type(3),
          PermClass::descent_type(4),
          PermClass::descent_set({2}),
          PermClass::ascent_set({1, 3})};
}

}  // namespace

TEST_CASE("generator matches filter") {
  for (const auto& c : sample_classes()) {
    for (int n = 0; n <= 8; ++n) {
      std::vector<Permutation> filtered;
      for (const auto& w : oracle::all_perms(n)) {
        if (class_member(w, c)) filtered.push_back(w);
      }
      const auto gen = generate(c, n);
      REQUIRE(gen == filtered);  // same members, same lexicographic order
      REQUIRE(class_size(c, n) == gen.size());
    }
  }
}

TEST_CASE("generator examples") {
  CHECK(generate(PermClass::alternating(), 4).size() == 5);
  const auto zero = generate(PermClass::all(), 0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].empty());
  const std::vector<std::uint64_t> euler{1, 1, 1, 2, 5, 16, 61, 272, 1385,
                                         7936, 50521};
  for (int n = 0; n <= 10; ++n) {
    CHECK(class_size(PermClass::alternating(), n) == euler[n]);
  }
}

TEST_CASE("pruned counts equal filter counts") {
  const std::vector<PermClass> classes{
      PermClass::all(), PermClass::alternating(), PermClass::descent_type(2),
      PermClass::descent_type(3), PermClass::descent_type(4)};
  for (int m = 1; m <= 4; ++m) {
    for (const auto& q : oracle::all_perms(m)) {
      for (const auto& c : classes) {
        for (int n = 1; n <= 8; ++n) {
          const auto expect = oracle::filter_count(
              n, [&](const Permutation& w) { return class_member(w, c); }, q);
          REQUIRE(count_avoiders_serial(q, c, n) == expect);
          REQUIRE(count_avoiders_parallel(q, c, n) == expect);
        }
      }
    }
  }
}

TEST_CASE("parallel split depth does not change counts") {
  const auto q = Permutation::parse("2413");
  const PatternMatcher m(q);
  const auto spec = SearchSpec::for_class(PermClass::alternating(), 10, &m);
  const auto ref = count_serial(spec);
  for (int d = 0; d <= 5; ++d) CHECK(count_parallel(spec, d) == ref);
}

TEST_CASE("count examples") {
  CHECK(count_avoiders_parallel(Permutation::parse("634521"),
                                PermClass::alternating(), 8) == 1385);
  for (int m = 2; m <= 5; ++m) {
    for (const auto& q : oracle::all_perms(m)) {
      CHECK(count_avoiders_parallel(q, PermClass::alternating(), 1) == 1);
    }
  }
  CHECK(count_avoiders_parallel(Permutation::parse("3124"),
                                PermClass::descent_type(3), 5) == 9);
}

TEST_CASE("sequences") {
  CHECK(sequence(Permutation::parse("2134"), PermClass::descent_type(3), 9) ==
        std::vector<std::uint64_t>{1, 1, 1, 3, 9, 9, 44, 153, 153});
  CHECK(sequence(Permutation::parse("21"), PermClass::all(), 5) ==
        std::vector<std::uint64_t>{1, 1, 1, 1, 1});
  const auto q = Permutation::parse("1234");
  const auto seq = sequence(q, PermClass::alternating(), 8);
  for (int n = 2; n <= 8; n += 2) {
    CHECK(seq[n - 1] == oracle::filter_count(n, oracle::is_alternating, q));
  }
}

TEST_CASE("alternating and reverse alternating related by complement") {
  for (int m = 1; m <= 4; ++m) {
    for (const auto& q : oracle::all_perms(m)) {
      for (int n = 1; n <= 8; ++n) {
        REQUIRE(count_avoiders_serial(q, PermClass::alternating(), n) ==
                count_avoiders_serial(q.complement(),
                                      PermClass::reverse_alternating(), n));
      }
    }
  }
}

TEST_CASE("descent type counts weakly increase") {
  // k = 1 is left out: the only member of each length is the decreasing
  // permutation, so 321 is contained from n = 3 on.
  for (int k = 2; k <= 4; ++k) {
    for (int m = 3; m <= 4; ++m) {
      for (const auto& q : oracle::all_perms(m)) {
        if (q == Permutation::identity(m) && m <= k) continue;
        const auto seq = sequence(q, PermClass::descent_type(k), 10);
        for (int n = k; n <= 9; ++n) REQUIRE(seq[n - 1] <= seq[n]);
      }
    }
  }
}

TEST_CASE("cache round trip") {
  const auto dir = std::filesystem::temp_directory_path() /
                   ("altperm-test-cache-" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  {
    CountCache cache(dir);
    const AvoidanceQuery q{Permutation::parse("2134"),
                           PermClass::descent_type(3), 8};
    CHECK(q.key() == "2134|dk:3|8");
    const auto first = count_avoiders(q, &cache);
    CHECK_FALSE(first.cached);
    CHECK(first.count == 153);
    const auto second = count_avoiders(q, &cache);
    CHECK(second.cached);
    CHECK(second.count == 153);
  }
  {
    CountCache reopened(dir);
    CHECK(reopened.lookup("2134|dk:3|8") == std::optional<std::uint64_t>(153));
    CHECK(reopened.entries().size() == 1);
  }
  std::filesystem::remove_all(dir);
}
