#include "polyprim/polygon.hpp"

#include <stdexcept>

namespace polyprim {

const char* kind_name(PolygonKind kind) {
  return kind == PolygonKind::Hexagon ? "hexagon" : "octagon";
}

Natural point_count(PolygonKind kind, const PolygonOrder& order) {
  if (order.s < 2 || order.t < 2)
    throw std::invalid_argument("point_count: order must be thick (s,t >= 2)");
  const Natural& s = order.s;
  const Natural& t = order.t;
  Natural st = s * t;
  if (kind == PolygonKind::Hexagon) return (s + 1) * (st * st + st + 1);
  return (s + 1) * (st + 1) * (st * st + 1);
}

bool order_admissible(PolygonKind kind, const PolygonOrder& order) {
  if (order.s < 1 || order.t < 1)
    throw std::invalid_argument("order_admissible: s,t must be positive");
  if (order.s < 2 || order.t < 2) return false;
  Natural st = order.s * order.t;
  if (kind == PolygonKind::Octagon) st *= 2;
  return is_perfect_square(st).is_square;
}

std::vector<Natural> distance_class_sizes(PolygonKind kind,
                                          const PolygonOrder& order) {
  if (order.s < 2 || order.t < 2)
    throw std::invalid_argument(
        "distance_class_sizes: order must be thick (s,t >= 2)");
  const Natural& s = order.s;
  const Natural& t = order.t;
  Natural s2 = s * s, t1 = t + 1;
  if (kind == PolygonKind::Hexagon)
    return {s * t1, s2 * t * t1, s2 * s * t * t};
  Natural s3 = s2 * s;
  return {s * t1, s2 * t * t1, s3 * t * t * t1, s3 * s * t * t * t};
}

OrderSolutions solve_orders(PolygonKind kind, const Natural& n,
                            const Factorization& f) {
  if (n < 1) throw std::invalid_argument("solve_orders: n must be positive");
  if (f.reconstruct() != n)
    throw std::invalid_argument("solve_orders: factorization does not match n");
  OrderSolutions result;
  if (!f.complete()) return result;  // decided stays false
  result.decided = true;

  // s+1 divides the count for both kinds, so enumerate candidate s that way.
  std::vector<Natural> divs = divisors(f);
  if (kind == PolygonKind::Hexagon) {
    // n/(s+1) = (st)^2 + st + 1, so 4*(n/(s+1)) - 3 must be an odd square.
    Natural m, d, x, s, t, rem;
    for (const Natural& u : divs) {
      if (u < 3) continue;
      ++result.divisors_examined;
      m = n / u;
      d = 4 * m - 3;
      SquareTest sq = is_perfect_square(d);
      if (!sq.is_square) continue;
      x = (sq.root - 1) / 2;  // root is odd since d is odd
      if (x < 4) continue;
      s = u - 1;
      mpz_tdiv_qr(t.get_mpz_t(), rem.get_mpz_t(), x.get_mpz_t(),
                  s.get_mpz_t());
      if (rem != 0 || t < 2) continue;
      if (!is_perfect_square(x).is_square) continue;
      result.orders.push_back(PolygonOrder{s, t});
    }
  } else {
    // n/(s+1) = (st+1)((st)^2+1); scan divisors v = st+1 of n, for which
    // the cofactor must equal (v-1)^2 + 1 exactly, i.e. n/(s+1) must equal
    // v((v-1)^2+1). Targets are precomputed once; they ascend with v.
    std::vector<std::pair<Natural, const Natural*>> targets;
    targets.reserve(divs.size());
    for (const Natural& v : divs) {
      if (v < 5) continue;
      Natural w = v - 1;
      targets.emplace_back((w * w + 1) * v, &v);
    }
    Natural q, s, t, rem;
    for (const Natural& u : divs) {
      if (u < 3) continue;
      ++result.divisors_examined;
      q = n / u;
      s = u - 1;
      for (const auto& [target, v] : targets) {
        if (target > q) break;  // targets ascend, so no later v can work
        if (target != q) continue;
        // st = v-1 must split as s * t with t >= 2
        Natural w = *v - 1;
        mpz_tdiv_qr(t.get_mpz_t(), rem.get_mpz_t(), w.get_mpz_t(),
                    s.get_mpz_t());
        if (rem != 0 || t < 2) continue;
        if (!is_perfect_square(2 * w).is_square) continue;
        result.orders.push_back(PolygonOrder{s, t});
        break;  // at most one v satisfies the exact product identity
      }
    }
  }
  return result;
}

}  // namespace polyprim
