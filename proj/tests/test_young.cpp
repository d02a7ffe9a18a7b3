#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "altperm/enumerate.hpp"
#include "altperm/young.hpp"
#include "oracles.hpp"

using namespace altperm;

namespace {

ADYoungDiagram ady(const char* text) { return ADYoungDiagram::parse(text); }

// Row subsets of size |m| whose columns standardize to m, with the last
// row reaching the largest chosen column.
bool naive_transversal_contains(const YoungDiagram& y, const Transversal& t,
                                const Permutation& m) {
  const int n = t.size(), r = m.size();
  if (r == 0) return true;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != r) continue;
    std::vector<int> cols;
    int last = -1;
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1u) {
        cols.push_back(t[i]);
        last = i;
      }
    }
    if (Permutation::standardize(cols) != m) continue;
    if (*std::max_element(cols.begin(), cols.end()) < y.row(last)) return true;
  }
  return false;
}

std::vector<Transversal> naive_valid(const ADYoungDiagram& y) {
  std::vector<Transversal> out;
  for (const auto& p : oracle::all_perms(y.size())) {
    bool ok = true;
    for (int i = 0; i < p.size() && ok; ++i) ok = p[i] < y.shape.row(i);
    for (int i : y.ascents) ok = ok && p[i - 1] < p[i];
    for (int i : y.descents) ok = ok && p[i - 1] > p[i];
    if (ok) out.push_back(p);
  }
  return out;
}

const Permutation kI2 = Permutation::parse("12");
const Permutation kJ2 = Permutation::parse("21");

}  // namespace

TEST_CASE("diagram construction") {
  CHECK(YoungDiagram::parse("4,4,2,2").rows() == std::vector<int>{4, 4, 2, 2});
  CHECK_THROWS_AS(YoungDiagram::parse("4,4,2"), std::invalid_argument);
  CHECK_THROWS_AS(YoungDiagram::parse("3,1,2"), std::invalid_argument);
  CHECK_THROWS_AS(YoungDiagram::parse("3,2,0"), std::invalid_argument);
  CHECK(YoungDiagram().size() == 0);
  const auto a = ady("4,4,2,2;A=;D=3");
  CHECK(a.to_string() == "4,4,2,2;A=;D=3");
  CHECK(a.descents == std::set<int>{3});
  CHECK_THROWS_AS(ADYoungDiagram::parse("3,3,1;A=1;D=1"),
                  std::invalid_argument);
  CHECK_THROWS_AS(ADYoungDiagram::make(YoungDiagram::parse("3,3,1"), {1}, {2}),
                  std::invalid_argument);
}

TEST_CASE("is_ad_young examples") {
  CHECK(is_ad_young(YoungDiagram::parse("4,4,2,2"), {}, {3}));
  CHECK_FALSE(is_ad_young(YoungDiagram::parse("3,3,1"), {1}, {2}));
  for (int n = 1; n <= 6; ++n) {
    CHECK(is_ad_young(YoungDiagram::square(n), {}, {}));
    std::set<int> a, d;
    for (int i = 1; i < n; ++i) (i % 2 ? a : d).insert(i);
    CHECK(is_ad_young(YoungDiagram::square(n), a, d));
  }
}

TEST_CASE("x-alternating examples") {
  const auto y = YoungDiagram::square(4);
  CHECK(is_x_alternating(ADYoungDiagram::make(y, {1}, {2}), 1));
  const auto b = ADYoungDiagram::make(y, {1, 3}, {2});
  CHECK(is_x_alternating(b, 2));
  CHECK_FALSE(is_x_alternating(b, 1));
  // Empty A and D satisfy every window.
  for (int n = 1; n <= 5; ++n) {
    for_each_young_diagram(n, [](const YoungDiagram& d) {
      REQUIRE(is_x_alternating(ADYoungDiagram{d, {}, {}}, 1));
      REQUIRE(is_x_semialternating(ADYoungDiagram{d, {}, {}}, 1));
    });
  }
}

TEST_CASE("square class diagrams carry the expected alternation") {
  for (int n = 1; n <= 9; ++n) {
    const auto alt = ADYoungDiagram::for_class(PermClass::alternating(), n);
    const auto ralt =
        ADYoungDiagram::for_class(PermClass::reverse_alternating(), n);
    if (n % 2 == 1) {
      CHECK(is_x_alternating(alt, 1));
      CHECK(is_x_semialternating(ralt, 2));
    } else {
      CHECK(is_x_alternating(alt, 2));
      CHECK(is_x_semialternating(ralt, 1));
    }
  }
}

TEST_CASE("valid transversals") {
  for (int m = 0; m <= 3; ++m) {
    const int n = 2 * m + 1;
    const auto y = ADYoungDiagram::for_class(PermClass::alternating(), n);
    CHECK(valid_transversals(y) == generate(PermClass::alternating(), n));
  }
  // Missing the staircase leaves nothing.
  CHECK(valid_transversals(ady("3,1,1;A=;D=")).empty());
  CHECK(valid_transversals(ady("4,4,2,2;A=;D=")) ==
        naive_valid(ady("4,4,2,2;A=;D=")));
  for_each_ad_young(5, [](const ADYoungDiagram& y) {
    REQUIRE(valid_transversals(y) == naive_valid(y));
    REQUIRE(count_valid_transversals(y) == naive_valid(y).size());
  });
}

TEST_CASE("transversal containment") {
  const auto y = YoungDiagram::parse("6,6,6,6,5,4");
  const auto t = Permutation::parse("346521");
  CHECK(transversal_contains(y, t, Permutation::parse("231")));
  CHECK_FALSE(transversal_contains(y, t, Permutation::parse("4321")));
  CHECK(contains(t, Permutation::parse("4321")));  // only the corner fails

  std::mt19937 rng(11);
  for (int n = 1; n <= 7; ++n) {
    for_each_young_diagram(n, [&](const YoungDiagram& d) {
      const auto ts = valid_transversals(ADYoungDiagram{d, {}, {}});
      for (std::size_t k = 0; k < ts.size(); k += 1 + rng() % 5) {
        for (int r = 1; r <= 3; ++r) {
          for (const auto& m : oracle::all_perms(r)) {
            REQUIRE(transversal_contains(d, ts[k], m) ==
                    naive_transversal_contains(d, ts[k], m));
          }
        }
      }
    });
  }
  for (int n = 1; n <= 6; ++n) {
    for (const auto& w : oracle::all_perms(n)) {
      for (const auto& m : oracle::all_perms(3)) {
        REQUIRE(transversal_contains(YoungDiagram::square(n), w, m) ==
                contains(w, m));
      }
    }
  }
}

TEST_CASE("avoiding transversal counts") {
  const auto y = ady("4,4,2,2;A=;D=3");
  CHECK(count_avoiding_transversals(y, kI2) == 1);
  CHECK(count_avoiding_transversals(y, kJ2) == 0);
  const auto r = ady("3,3,1;A=1;D=2");
  CHECK_FALSE(r.well_formed());
  CHECK(count_avoiding_transversals(r, kI2) == 0);
  CHECK(count_avoiding_transversals(r, kJ2) == 1);
  for_each_ad_young(5, [](const ADYoungDiagram& d) {
    const auto total = count_valid_transversals(d);
    for (int m = 1; m <= 3; ++m) {
      for (const auto& p : oracle::all_perms(m)) {
        std::uint64_t naive = 0;
        for (const auto& t : naive_valid(d)) {
          if (!naive_transversal_contains(d.shape, t, p)) ++naive;
        }
        REQUIRE(count_avoiding_transversals(d, p) == naive);
        REQUIRE(naive <= total);
      }
    }
  });
  CHECK(count_avoiding_transversals(ADYoungDiagram{}, kI2) == 1);
}

TEST_CASE("canonical J2 avoider") {
  const auto t = j2_canonical_transversal(ady("4,4,2,2;A=;D="));
  REQUIRE(t.has_value());
  CHECK(t->one_based() == std::vector<int>{3, 4, 1, 2});
  for (int n = 1; n <= 6; ++n) {
    const ADYoungDiagram sq{YoungDiagram::square(n), {}, {}};
    const auto c = j2_canonical_transversal(sq);
    REQUIRE(c.has_value());
    const auto avoiders = avoiding_transversals(sq, kJ2);
    REQUIRE(avoiders.size() == 1);
    CHECK(avoiders[0] == *c);
  }
  CHECK(j2_canonical_transversal(ady("2,1;A=;D=")).has_value());
  CHECK_FALSE(j2_canonical_transversal(ady("3,1,1;A=;D=")).has_value());
  for_each_ad_young(6, [](const ADYoungDiagram& d) {
    if (!d.descents.empty()) return;
    const auto c = j2_canonical_transversal(d);
    const auto avoiders = avoiding_transversals(d, kJ2);
    if (c) {
      REQUIRE(is_valid_transversal(d, *c));
      REQUIRE(avoiders == std::vector<Transversal>{*c});
    } else {
      REQUIRE(avoiders.empty());
    }
  });
}

TEST_CASE("shape2 closed form on all diagrams up to 6 rows") {
  for_each_ad_young(6, [](const ADYoungDiagram& d) {
    REQUIRE(count_avoiding_transversals(d, kI2) == shape2_count_i2(d));
    REQUIRE(count_avoiding_transversals(d, kJ2) == shape2_count_j2(d));
    if (is_x_alternating(d, 1)) {
      REQUIRE(count_avoiding_transversals(d, kI2) ==
              count_avoiding_transversals(d, kJ2));
    }
  });
}

TEST_CASE("square diagrams reproduce class counts") {
  for (int m = 1; m <= 4; ++m) {
    for (const auto& q : oracle::all_perms(m)) {
      for (int n = 1; n <= 9; ++n) {
        for (const auto& c :
             {PermClass::alternating(), PermClass::reverse_alternating()}) {
          REQUIRE(count_avoiding_transversals(ADYoungDiagram::for_class(c, n),
                                              q) ==
                  count_avoiders_serial(q, c, n));
        }
      }
    }
  }
}
