#pragma once

// Deliberately naive reference implementations. Single loops, no divisor
// tricks, no shortcuts: these exist so the engine's clever routes can be
// checked against code whose correctness is evident by inspection.

#include "polyprim/polygon.hpp"

#include <array>
#include <utility>
#include <vector>

namespace polyprim {

// Every admissible order with point count <= cap, ascending by (count, s).
// cap <= 10^9.
std::vector<std::pair<PolygonOrder, Natural>> enumerate_admissible_orders(
    PolygonKind kind, const Natural& cap);

// Scans (s,t) directly for point_count == n, admissible orders only.
// n <= 10^9. Ascending by (s,t).
std::vector<PolygonOrder> brute_solve_orders(PolygonKind kind,
                                             const Natural& n);

struct BruteSubdegreeWitness {
  PolygonOrder order;
  std::array<int, 4> block{};  // as in AssignmentRecord
  friend bool operator==(const BruteSubdegreeWitness&,
                         const BruteSubdegreeWitness&) = default;
};

// Scans thick (s,t) up to the bound (with exact monotone cutoffs) for
// hexagon distance-class sizes matching some assignment of the four
// subdegrees to the three classes. Expected empty for genuine rank-5 data.
std::vector<BruteSubdegreeWitness> brute_subdegree_check(
    const std::vector<Natural>& subdegrees, unsigned long bound);

}  // namespace polyprim
