#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "altperm/extension.hpp"
#include "oracles.hpp"

using namespace altperm;

namespace {

const Permutation kI2 = Permutation::parse("12");
const Permutation kJ2 = Permutation::parse("21");
const std::vector<Permutation> kBlocks{Permutation::parse("1"),
                                       Permutation::parse("12"),
                                       Permutation::parse("21")};

// Subsets of the southeast elements, standardized, with the corner check.
bool naive_dominant(const YoungDiagram& y, const Transversal& t,
                    const Permutation& c, int a, int b) {
  if (!y.contains_square(a, b)) return false;
  std::vector<int> rows;
  for (int i = a + 1; i < t.size(); ++i) {
    if (t[i] > b) rows.push_back(i);
  }
  const int r = c.size();
  if (r == 0) return true;
  const int m = static_cast<int>(rows.size());
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (__builtin_popcount(mask) != r) continue;
    std::vector<int> cols;
    int last = -1;
    for (int j = 0; j < m; ++j) {
      if (mask >> j & 1u) {
        cols.push_back(t[rows[j]]);
        last = rows[j];
      }
    }
    if (Permutation::standardize(cols) == c &&
        *std::max_element(cols.begin(), cols.end()) < y.row(last)) {
      return true;
    }
  }
  return false;
}

struct Sample {
  ADYoungDiagram y;
  Transversal t;
};

std::vector<Sample> random_samples(int count, int max_rows, unsigned seed) {
  std::vector<ADYoungDiagram> pool;
  for_each_ad_young(max_rows, [&](const ADYoungDiagram& d) {
    if (count_valid_transversals(d) > 0) pool.push_back(d);
  });
  std::mt19937 rng(seed);
  std::vector<Sample> out;
  while (static_cast<int>(out.size()) < count) {
    const auto& d = pool[rng() % pool.size()];
    const auto ts = valid_transversals(d);
    out.push_back({d, ts[rng() % ts.size()]});
  }
  return out;
}

}  // namespace

TEST_CASE("degenerate blocks") {
  const ADYoungDiagram sq{YoungDiagram::square(3), {}, {}};
  const auto t = Permutation::parse("231");
  const auto big = Permutation::parse("4321");
  const auto region = dominant_region(sq.shape, t, big);
  CHECK(region.rows == std::vector<int>{0, 0, 0});
  CHECK(nondominant_set(sq.shape, t, big).size() == 3);
  const auto none = successor(sq, t, big);
  CHECK(none.diagram.size() == 0);
  CHECK(none.row_map.empty());

  const Permutation empty;
  CHECK(dominant_region(sq.shape, t, empty).rows == std::vector<int>{3, 3, 3});
  CHECK(nondominant_set(sq.shape, t, empty).empty());
  const ADYoungDiagram alt = ADYoungDiagram::for_class(PermClass::alternating(), 3);
  const auto all = successor(alt, Permutation::parse("132"), empty);
  CHECK(all.diagram == alt);
  CHECK(all.row_map == std::vector<int>{0, 1, 2});
}

TEST_CASE("single-cell block on the anti-identity") {
  const auto y = YoungDiagram::square(3);
  const auto t = Permutation::parse("321");
  const Permutation one = Permutation::parse("1");
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      bool below_right = false;
      for (int i = a + 1; i < 3; ++i) below_right |= t[i] > b;
      CHECK(is_dominant(y, t, one, a, b) == below_right);
    }
  }
}

TEST_CASE("dominance against subset oracle and Young shape") {
  for (const auto& s : random_samples(200, 6, 3)) {
    for (int r = 1; r <= 3; ++r) {
      for (const auto& c : oracle::all_perms(r)) {
        const auto region = dominant_region(s.y.shape, s.t, c);
        REQUIRE(region.is_young_shaped(s.y.shape));
        for (int a = 0; a < s.y.size(); ++a) {
          for (int b = 0; b < s.y.size(); ++b) {
            REQUIRE(region.contains(a, b) ==
                    naive_dominant(s.y.shape, s.t, c, a, b));
          }
        }
        const auto n = nondominant_set(s.y.shape, s.t, c);
        for (int i = 0; i < s.t.size(); ++i) {
          const bool listed =
              std::find(n.begin(), n.end(), Cell{i, s.t[i]}) != n.end();
          REQUIRE(listed == !region.contains(i, s.t[i]));
        }
      }
    }
  }
}

TEST_CASE("shifting a dominant square down one row") {
  // (j, y) dominant and t_{j+1} <= y  =>  (j+1, y) dominant.
  for (const auto& s : random_samples(200, 6, 5)) {
    for (const auto& c : kBlocks) {
      for (int j = 0; j + 1 < s.t.size(); ++j) {
        for (int y = 0; y < s.y.size(); ++y) {
          if (is_dominant(s.y.shape, s.t, c, j, y) && s.t[j + 1] <= y) {
            REQUIRE(is_dominant(s.y.shape, s.t, c, j + 1, y));
          }
        }
      }
    }
  }
}

TEST_CASE("successor depends only on the non-dominant set") {
  for_each_ad_young(5, [](const ADYoungDiagram& y) {
    for (const auto& c : kBlocks) {
      std::map<std::vector<Cell>, SuccessorDiagram> seen;
      for_each_valid_transversal(y, [&](const Transversal& t) {
        const auto n = nondominant_set(y.shape, t, c);
        const auto s = successor(y, t, c);
        auto [it, fresh] = seen.emplace(n, s);
        if (!fresh) REQUIRE(it->second == s);
      });
    }
  });
}

TEST_CASE("successor lemmas on all parents up to 5 rows") {
  for_each_ad_young(5, [](const ADYoungDiagram& y) {
    for (int r = 1; r <= 2; ++r) {
      for (const auto& c : oracle::all_perms(r)) {
        for (const auto& f : realizable_nondominant_sets(y, c)) {
          const auto s = successor(y, f.witness, c);
          REQUIRE(s.diagram.well_formed());
          REQUIRE(alt_technical_holds(y, s));
          for (int x = 1; x <= y.size(); ++x) {
            if (is_x_alternating(y, x + r)) {
              REQUIRE(is_x_alternating(s.diagram, x));
            }
            if (is_x_semialternating(y, x + r)) {
              REQUIRE(is_x_semialternating(s.diagram, x));
            }
          }
        }
      }
    }
  });
}

TEST_CASE("deletion and reinsertion are inverse") {
  for (const auto& s : random_samples(200, 6, 9)) {
    for (const auto& c : kBlocks) {
      const auto n = nondominant_set(s.y.shape, s.t, c);
      const auto succ = successor(s.y, s.t, c);
      const auto image = deletion_image(succ, s.t);
      REQUIRE(is_valid_transversal(succ.diagram, image));
      REQUIRE(reinsert(s.y, n, succ, image) == s.t);
    }
  }
  // Every valid transversal of a successor reinserts to a valid
  // transversal with the same non-dominant set.
  for_each_ad_young(5, [](const ADYoungDiagram& y) {
    for (const auto& c : kBlocks) {
      for (const auto& f : realizable_nondominant_sets(y, c)) {
        const auto s = successor(y, f.witness, c);
        for_each_valid_transversal(s.diagram, [&](const Transversal& tp) {
          const auto back = reinsert(y, f.cells, s, tp);
          REQUIRE(is_valid_transversal(y, back));
          REQUIRE(nondominant_set(y.shape, back, c) == f.cells);
        });
      }
    }
  });
  const ADYoungDiagram sq{YoungDiagram::square(2), {}, {}};
  const auto t = Permutation::parse("21");
  const auto big = Permutation::parse("123");
  const auto s = successor(sq, t, big);
  CHECK(reinsert(sq, nondominant_set(sq.shape, t, big), s, Transversal()) == t);
  CHECK_THROWS_AS(reinsert(sq, {{0, 0}, {1, 0}}, s, Transversal()),
                  std::invalid_argument);
}

TEST_CASE("decomposition identity") {
  const auto alt4 = ADYoungDiagram::for_class(PermClass::alternating(), 4);
  CHECK(verify_embed2(alt4, kI2, Permutation::parse("1")));
  const auto big = Permutation::parse("12345");
  const auto sides = embed2_sides(alt4, kI2, big);
  CHECK(sides.lhs == count_valid_transversals(alt4));
  CHECK(sides.rhs == sides.lhs);
  for_each_ad_young(5, [](const ADYoungDiagram& y) {
    if (!is_x_alternating(y, 1)) return;
    for (const auto& p : {kI2, kJ2}) {
      for (const auto& c : kBlocks) REQUIRE(verify_embed2(y, p, c));
    }
  });
}

TEST_CASE("I2 and J2 stay equivalent after adding a block") {
  for_each_ad_young(6, [](const ADYoungDiagram& y) {
    for (const auto& c : kBlocks) {
      if (!is_x_alternating(y, 1 + c.size())) continue;
      REQUIRE(count_avoiding_transversals(y, kI2.direct_sum(c)) ==
              count_avoiding_transversals(y, kJ2.direct_sum(c)));
    }
  });
}
