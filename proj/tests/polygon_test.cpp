#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyprim/polygon.hpp"

#include <stdexcept>

using namespace polyprim;

namespace {
OrderSolutions solve(PolygonKind kind, const Natural& n) {
  return solve_orders(kind, n, factorize(n));
}
}  // namespace

TEST_CASE("kind_name") {
  CHECK(std::string(kind_name(PolygonKind::Hexagon)) == "hexagon");
  CHECK(std::string(kind_name(PolygonKind::Octagon)) == "octagon");
}

TEST_CASE("point_count closed forms") {
  CHECK(point_count(PolygonKind::Hexagon, {2, 2}) == 63);
  CHECK(point_count(PolygonKind::Hexagon, {8, 8}) == 37449);
  CHECK(point_count(PolygonKind::Octagon, {2, 4}) == 1755);
  CHECK(point_count(PolygonKind::Octagon, {4, 2}) == 2925);
  CHECK(point_count(PolygonKind::Octagon, {8, 64}) == Natural("1210323465"));
  CHECK_THROWS_AS(point_count(PolygonKind::Hexagon, {1, 2}),
                  std::invalid_argument);
  CHECK_THROWS_AS(point_count(PolygonKind::Octagon, {2, 1}),
                  std::invalid_argument);
}

TEST_CASE("order_admissible square conditions") {
  CHECK(order_admissible(PolygonKind::Hexagon, {2, 2}));
  CHECK(order_admissible(PolygonKind::Hexagon, {2, 8}));
  CHECK_FALSE(order_admissible(PolygonKind::Hexagon, {2, 3}));
  CHECK_FALSE(order_admissible(PolygonKind::Hexagon, {2, 4}));
  CHECK(order_admissible(PolygonKind::Octagon, {2, 4}));
  CHECK(order_admissible(PolygonKind::Octagon, {8, 64}));
  CHECK_FALSE(order_admissible(PolygonKind::Octagon, {2, 2}));
  CHECK_FALSE(order_admissible(PolygonKind::Octagon, {3, 3}));
  // thin orders are inadmissible but not an error
  CHECK_FALSE(order_admissible(PolygonKind::Hexagon, {1, 4}));
  CHECK_FALSE(order_admissible(PolygonKind::Octagon, {4, 1}));
  CHECK_THROWS_AS(order_admissible(PolygonKind::Hexagon, {0, 2}),
                  std::invalid_argument);
}

TEST_CASE("distance_class_sizes partition the points") {
  CHECK(distance_class_sizes(PolygonKind::Hexagon, {2, 2}) ==
        std::vector<Natural>{6, 24, 32});
  CHECK(distance_class_sizes(PolygonKind::Octagon, {2, 4}) ==
        std::vector<Natural>{10, 80, 640, 1024});
  for (unsigned long s = 2; s <= 9; ++s) {
    for (unsigned long t = 2; t <= 9; ++t) {
      for (PolygonKind kind : {PolygonKind::Hexagon, PolygonKind::Octagon}) {
        Natural total = 1;
        for (const Natural& c : distance_class_sizes(kind, {s, t})) total += c;
        CHECK(total == point_count(kind, {s, t}));
      }
    }
  }
}

TEST_CASE("solve_orders hexagon") {
  OrderSolutions sol = solve(PolygonKind::Hexagon, 63);
  REQUIRE(sol.decided);
  CHECK(sol.orders == std::vector<PolygonOrder>{{2, 2}});
  CHECK(sol.divisors_examined > 0);

  CHECK(solve(PolygonKind::Hexagon, 64).orders.empty());
  CHECK(solve(PolygonKind::Hexagon, 64).decided);

  OrderSolutions big = solve(PolygonKind::Hexagon, 37449);
  REQUIRE(big.decided);
  CHECK(big.orders == std::vector<PolygonOrder>{{8, 8}});
}

TEST_CASE("solve_orders octagon") {
  OrderSolutions sol = solve(PolygonKind::Octagon, 1755);
  REQUIRE(sol.decided);
  CHECK(sol.orders == std::vector<PolygonOrder>{{2, 4}});

  OrderSolutions pinned = solve(PolygonKind::Octagon, Natural("59960979"));
  REQUIRE(pinned.decided);
  CHECK(pinned.orders.empty());

  OrderSolutions classical = solve(PolygonKind::Octagon, Natural("1210323465"));
  REQUIRE(classical.decided);
  CHECK(classical.orders == std::vector<PolygonOrder>{{8, 64}});
}

TEST_CASE("solve_orders only enumerates for complete factorizations") {
  Natural n = Natural(1000003) * 1000033;
  Factorization f = factorize(n, FactorEffort{10, 5});
  REQUIRE_FALSE(f.complete());
  OrderSolutions sol = solve_orders(PolygonKind::Hexagon, n, f);
  CHECK_FALSE(sol.decided);
  CHECK(sol.orders.empty());
}

TEST_CASE("solve_orders validates the factorization") {
  Factorization f = factorize(63);
  CHECK_THROWS_AS(solve_orders(PolygonKind::Hexagon, 64, f),
                  std::invalid_argument);
}
