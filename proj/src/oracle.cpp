#include "polyprim/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace polyprim {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kOracleCap = 1000000000ull;

bool square_u64(u64 n) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r * r == n;
}

u128 count_u128(bool hexagon, u64 s, u64 t) {
  u128 st = u128(s) * t;
  if (hexagon) return u128(s + 1) * (st * st + st + 1);
  return u128(s + 1) * (st + 1) * (st * st + 1);
}

}  // namespace

std::vector<std::pair<PolygonOrder, Natural>> enumerate_admissible_orders(
    PolygonKind kind, const Natural& cap) {
  if (cap < 1 || cap > Natural(static_cast<unsigned long>(kOracleCap)))
    throw std::invalid_argument(
        "enumerate_admissible_orders: cap must lie in [1, 10^9]");
  u64 limit = mpz_get_ui(cap.get_mpz_t());
  bool hexagon = kind == PolygonKind::Hexagon;
  std::vector<std::pair<u64, std::pair<u64, u64>>> rows;
  for (u64 s = 2;; ++s) {
    if (count_u128(hexagon, s, 2) > limit) break;
    for (u64 t = 2;; ++t) {
      u128 n = count_u128(hexagon, s, t);
      if (n > limit) break;
      u64 st2 = hexagon ? s * t : 2 * s * t;
      if (!square_u64(st2)) continue;
      rows.push_back({static_cast<u64>(n), {s, t}});
    }
  }
  std::sort(rows.begin(), rows.end());
  std::vector<std::pair<PolygonOrder, Natural>> out;
  out.reserve(rows.size());
  for (const auto& [n, st] : rows)
    out.push_back({PolygonOrder{Natural(static_cast<unsigned long>(st.first)),
                                Natural(static_cast<unsigned long>(st.second))},
                   Natural(static_cast<unsigned long>(n))});
  return out;
}

std::vector<PolygonOrder> brute_solve_orders(PolygonKind kind,
                                             const Natural& n) {
  if (n < 1 || n > Natural(static_cast<unsigned long>(kOracleCap)))
    throw std::invalid_argument(
        "brute_solve_orders: n must lie in [1, 10^9]");
  u64 target = mpz_get_ui(n.get_mpz_t());
  bool hexagon = kind == PolygonKind::Hexagon;
  std::vector<std::pair<u64, u64>> found;
  for (u64 s = 2;; ++s) {
    if (count_u128(hexagon, s, 2) > target) break;
    for (u64 t = 2;; ++t) {
      u128 c = count_u128(hexagon, s, t);
      if (c > target) break;
      if (c != target) continue;
      u64 st2 = hexagon ? s * t : 2 * s * t;
      if (square_u64(st2)) found.push_back({s, t});
    }
  }
  std::sort(found.begin(), found.end());
  std::vector<PolygonOrder> out;
  out.reserve(found.size());
  for (const auto& [s, t] : found)
    out.push_back(PolygonOrder{Natural(static_cast<unsigned long>(s)),
                               Natural(static_cast<unsigned long>(t))});
  return out;
}

std::vector<BruteSubdegreeWitness> brute_subdegree_check(
    const std::vector<Natural>& subdegrees, unsigned long bound) {
  if (subdegrees.size() != 4)
    throw std::invalid_argument(
        "brute_subdegree_check: exactly four subdegrees required");
  if (bound < 2)
    throw std::invalid_argument("brute_subdegree_check: bound must be >= 2");
  Natural total = 1;
  for (const Natural& d : subdegrees) total += d;
  std::vector<BruteSubdegreeWitness> out;
  // Try every map of the four subdegrees onto the three hexagon classes
  // that uses all three, with orders drawn from the bounded grid.
  for (unsigned long su = 2; su <= bound; ++su) {
    Natural s(su);
    PolygonOrder floor_order{s, Natural(2)};
    if (point_count(PolygonKind::Hexagon, floor_order) > total) break;
    for (unsigned long tu = 2; tu <= bound; ++tu) {
      Natural t(tu);
      PolygonOrder order{s, t};
      if (point_count(PolygonKind::Hexagon, order) > total) break;
      if (!order_admissible(PolygonKind::Hexagon, order)) continue;
      std::vector<Natural> classes =
          distance_class_sizes(PolygonKind::Hexagon, order);
      for (int a0 = 0; a0 < 3; ++a0)
        for (int a1 = 0; a1 < 3; ++a1)
          for (int a2 = 0; a2 < 3; ++a2)
            for (int a3 = 0; a3 < 3; ++a3) {
              bool used[3] = {false, false, false};
              used[a0] = used[a1] = used[a2] = used[a3] = true;
              if (!used[0] || !used[1] || !used[2]) continue;
              Natural sums[3] = {0, 0, 0};
              sums[a0] += subdegrees[0];
              sums[a1] += subdegrees[1];
              sums[a2] += subdegrees[2];
              sums[a3] += subdegrees[3];
              if (sums[0] == classes[0] && sums[1] == classes[1] &&
                  sums[2] == classes[2]) {
                std::array<int, 4> block{2 * (a0 + 1), 2 * (a1 + 1),
                                         2 * (a2 + 1), 2 * (a3 + 1)};
                out.push_back(BruteSubdegreeWitness{order, block});
              }
            }
    }
  }
  return out;
}

}  // namespace polyprim
