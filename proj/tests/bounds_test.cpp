#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyprim/bounds.hpp"

#include <stdexcept>

using namespace polyprim;

TEST_CASE("lemma_threshold_detail picks the strongest applicable clause") {
  ThresholdDetail d = lemma_threshold_detail(PolygonKind::Octagon, {0, 8});
  CHECK(d.value == 43046721);  // 3^16
  CHECK(d.clause == "2^a*3^(2b)");

  d = lemma_threshold_detail(PolygonKind::Hexagon, {5, 0});
  CHECK(d.value == 32768);  // 2^15
  CHECK(d.clause == "2^(3a)");

  d = lemma_threshold_detail(PolygonKind::Hexagon, {0, 2});
  CHECK(d.value == 9);  // 3^2
  CHECK(d.clause == "3^(3b-4)");

  // 3b - 4 < 0: the 3-part clause is vacuous at b = 1
  d = lemma_threshold_detail(PolygonKind::Hexagon, {0, 1});
  CHECK(d.value == 0);
  CHECK(d.clause == "none");

  d = lemma_threshold_detail(PolygonKind::Hexagon, {0, 0});
  CHECK(d.value == 0);
  CHECK(d.clause == "none");

  // 2^6 = 64 beats 3^2 = 9
  d = lemma_threshold_detail(PolygonKind::Hexagon, {2, 2});
  CHECK(d.value == 64);
  CHECK(d.clause == "2^(3a)");

  // octagon with both valuations: 2^2 * 3^4 = 324 beats 2^6 = 64
  d = lemma_threshold_detail(PolygonKind::Octagon, {2, 2});
  CHECK(d.value == 324);
  CHECK(d.clause == "2^a*3^(2b)");

  CHECK(lemma_threshold(PolygonKind::Octagon, {0, 8}) == 43046721);
}

TEST_CASE("valuation_test fires exactly on counts at or below the threshold") {
  auto fired = valuation_test(PolygonKind::Hexagon, 2080);
  REQUIRE(fired.has_value());
  CHECK(fired->profile == ValuationProfile{5, 0});
  CHECK(fired->threshold == 32768);
  CHECK(fired->clause == "2^(3a)");

  CHECK_FALSE(valuation_test(PolygonKind::Hexagon, 63).has_value());
  CHECK_FALSE(valuation_test(PolygonKind::Octagon, 1755).has_value());
  CHECK(valuation_test(PolygonKind::Octagon, 2080).has_value());

  // boundary: n exactly equal to its threshold is eliminated
  CHECK(valuation_test(PolygonKind::Hexagon, 32768).has_value());

  // odd, 3-free counts have no applicable clause and never fire
  CHECK_FALSE(valuation_test(PolygonKind::Hexagon, 35).has_value());

  CHECK_THROWS_AS(valuation_test(PolygonKind::Hexagon, 0),
                  std::invalid_argument);
}

TEST_CASE("lemma_oracle finds no violations on realised counts") {
  for (PolygonKind kind : {PolygonKind::Hexagon, PolygonKind::Octagon}) {
    LemmaReport report = lemma_oracle(kind, 200000);
    CHECK(report.orders_checked > 0);
    CHECK(report.violations.empty());
  }
  CHECK_THROWS_AS(lemma_oracle(PolygonKind::Hexagon, 0), std::invalid_argument);
  CHECK_THROWS_AS(lemma_oracle(PolygonKind::Hexagon, Natural("1000000001")),
                  std::invalid_argument);
}
