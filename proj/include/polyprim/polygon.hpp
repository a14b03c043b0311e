#pragma once

// Point-count arithmetic for thick generalised hexagons and octagons of
// order (s,t): closed-form counts, admissibility (the square conditions),
// distance-class sizes, and an exact divisor-based solver inverting the
// point-count formula.

#include "polyprim/arith.hpp"

#include <vector>

namespace polyprim {

enum class PolygonKind { Hexagon, Octagon };
const char* kind_name(PolygonKind kind);  // "hexagon" / "octagon"

struct PolygonOrder {
  Natural s;
  Natural t;
  friend bool operator==(const PolygonOrder&, const PolygonOrder&) = default;
};

// Number of points. Hexagon: (s+1)(s^2 t^2 + s t + 1).
// Octagon: (s+1)(s t + 1)(s^2 t^2 + 1). Rejects s < 2 or t < 2.
Natural point_count(PolygonKind kind, const PolygonOrder& order);

// Thickness (s,t >= 2) plus the square condition: st must be a square for a
// hexagon, 2st for an octagon. Rejects s = 0 or t = 0.
bool order_admissible(PolygonKind kind, const PolygonOrder& order);

// Sizes of the point sets at incidence-graph distance 2,4,6(,8) from a
// point, nearest first. They partition the points away from the base point.
std::vector<Natural> distance_class_sizes(PolygonKind kind,
                                          const PolygonOrder& order);

struct OrderSolutions {
  // False when the factorization is incomplete: no divisor enumeration is
  // possible, which is distinct from a decided empty solution set.
  bool decided = false;
  std::vector<PolygonOrder> orders;  // ascending by s (unique per s)
  unsigned long divisors_examined = 0;
  friend bool operator==(const OrderSolutions&, const OrderSolutions&) = default;
};

// Every admissible (s,t) with point_count(kind,(s,t)) == n, found by exact
// divisor analysis of f (which must be a factorization of n).
OrderSolutions solve_orders(PolygonKind kind, const Natural& n,
                            const Factorization& f);

}  // namespace polyprim
