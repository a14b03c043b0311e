#include "polyprim/bounds.hpp"

#include "polyprim/oracle.hpp"

#include <stdexcept>

namespace polyprim {

ThresholdDetail lemma_threshold_detail(PolygonKind kind,
                                       const ValuationProfile& profile) {
  ThresholdDetail best{Natural(0), "none"};
  auto consider = [&](const Natural& value, const char* clause) {
    if (value > best.value) best = ThresholdDetail{value, clause};
  };
  if (profile.a >= 1) consider(pow_ui(2, 3 * profile.a), "2^(3a)");
  if (profile.b >= 1) {
    if (kind == PolygonKind::Hexagon) {
      // 3^(3b-4) only once the exponent is nonnegative; at b=1 the bound
      // degenerates and excludes nothing.
      if (3 * profile.b >= 4)
        consider(pow_ui(3, 3 * profile.b - 4), "3^(3b-4)");
    } else {
      consider(pow_ui(2, profile.a) * pow_ui(3, 2 * profile.b),
               "2^a*3^(2b)");
    }
  }
  return best;
}

Natural lemma_threshold(PolygonKind kind, const ValuationProfile& profile) {
  return lemma_threshold_detail(kind, profile).value;
}

std::optional<ValuationEvidence> valuation_test(PolygonKind kind,
                                                const Natural& n) {
  if (n < 1) throw std::invalid_argument("valuation_test: n must be positive");
  ValuationProfile profile{p_valuation(2, n), p_valuation(3, n)};
  ThresholdDetail detail = lemma_threshold_detail(kind, profile);
  if (detail.value == 0 || n > detail.value) return std::nullopt;
  return ValuationEvidence{n, profile, detail.value, detail.clause};
}

LemmaReport lemma_oracle(PolygonKind kind, const Natural& cap) {
  if (cap < 1 || cap > Natural(1000000000ul))
    throw std::invalid_argument("lemma_oracle: cap must lie in [1, 10^9]");
  LemmaReport report;
  report.kind = kind;
  report.cap = cap;
  auto admissible = enumerate_admissible_orders(kind, cap);
  for (const auto& [order, count] : admissible) {
    ++report.orders_checked;
    ValuationProfile profile{p_valuation(2, count), p_valuation(3, count)};
    // Each clause of the bound must hold for a realised count, and the
    // packaged test must therefore never fire on one.
    if (profile.a >= 1 && count <= pow_ui(2, 3 * profile.a))
      report.violations.push_back(LemmaViolation{order, count, "2^(3a)"});
    if (profile.b >= 1) {
      if (kind == PolygonKind::Hexagon) {
        if (3 * profile.b >= 4 && count <= pow_ui(3, 3 * profile.b - 4))
          report.violations.push_back(
              LemmaViolation{order, count, "3^(3b-4)"});
      } else {
        if (count <= pow_ui(2, profile.a) * pow_ui(3, 2 * profile.b))
          report.violations.push_back(
              LemmaViolation{order, count, "2^a*3^(2b)"});
      }
    }
    if (valuation_test(kind, count))
      report.violations.push_back(LemmaViolation{order, count, "packaged"});
  }
  return report;
}

}  // namespace polyprim
