#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyprim/oracle.hpp"

#include <stdexcept>

using namespace polyprim;

TEST_CASE("enumerate_admissible_orders hexagon") {
  auto rows = enumerate_admissible_orders(PolygonKind::Hexagon, 2000);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].first == PolygonOrder{2, 2});
  CHECK(rows[0].second == 63);
  CHECK(rows[1].first == PolygonOrder{3, 3});
  CHECK(rows[1].second == 364);
  CHECK(rows[2].first == PolygonOrder{2, 8});
  CHECK(rows[2].second == 819);
  CHECK(rows[3].first == PolygonOrder{4, 4});
  CHECK(rows[3].second == 1365);
}

TEST_CASE("enumerate_admissible_orders octagon") {
  auto rows = enumerate_admissible_orders(PolygonKind::Octagon, 5000);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].first == PolygonOrder{2, 4});
  CHECK(rows[0].second == 1755);
  CHECK(rows[1].first == PolygonOrder{4, 2});
  CHECK(rows[1].second == 2925);
}

TEST_CASE("enumerate_admissible_orders respects the cap contract") {
  CHECK(enumerate_admissible_orders(PolygonKind::Hexagon, 62).empty());
  CHECK(enumerate_admissible_orders(PolygonKind::Hexagon, 63).size() == 1);
  CHECK_THROWS_AS(enumerate_admissible_orders(PolygonKind::Hexagon, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      enumerate_admissible_orders(PolygonKind::Hexagon, Natural("1000000001")),
      std::invalid_argument);
}

TEST_CASE("brute_solve_orders") {
  CHECK(brute_solve_orders(PolygonKind::Hexagon, 63) ==
        std::vector<PolygonOrder>{{2, 2}});
  CHECK(brute_solve_orders(PolygonKind::Hexagon, 64).empty());
  CHECK(brute_solve_orders(PolygonKind::Octagon, 1755) ==
        std::vector<PolygonOrder>{{2, 4}});
  CHECK(brute_solve_orders(PolygonKind::Octagon, Natural("59960979")).empty());
  CHECK(brute_solve_orders(PolygonKind::Octagon, 101475) ==
        std::vector<PolygonOrder>{{2, 16}});
  CHECK_THROWS_AS(brute_solve_orders(PolygonKind::Octagon, Natural("1210323465")),
                  std::invalid_argument);
}

TEST_CASE("brute_subdegree_check") {
  std::vector<BruteSubdegreeWitness> hits =
      brute_subdegree_check({6, 24, 16, 16}, 100);
  REQUIRE(hits.size() == 1);
  CHECK(hits[0].order == PolygonOrder{2, 2});
  CHECK(hits[0].block == std::array<int, 4>{2, 4, 6, 6});

  CHECK(brute_subdegree_check({6, 24, 16, 17}, 100).empty());

  // classes in a different split: 24 = 8 + 16 against distance class 4
  hits = brute_subdegree_check({6, 8, 16, 32}, 100);
  REQUIRE(hits.size() == 1);
  CHECK(hits[0].order == PolygonOrder{2, 2});
  CHECK(hits[0].block == std::array<int, 4>{2, 4, 4, 6});

  CHECK_THROWS_AS(brute_subdegree_check({6, 24, 16}, 100),
                  std::invalid_argument);
  CHECK_THROWS_AS(brute_subdegree_check({6, 24, 16, 16}, 1),
                  std::invalid_argument);
}
