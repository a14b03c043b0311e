#pragma once

// Divisibility lower bounds on point counts. A thick generalised hexagon or
// octagon with n points satisfies, writing a = v2(n) and b = v3(n):
//   both kinds: a >= 1 implies n > 2^(3a)
//   hexagon:    b >= 1 implies n > 3^(3b-4)   (vacuous at b = 1)
//   octagon:    b >= 1 implies n > 2^a 3^(2b)
// lemma_threshold returns the largest applicable bound; valuation_test fires
// when n fails to exceed it, eliminating the count outright.

#include "polyprim/polygon.hpp"

#include <optional>
#include <string>
#include <vector>

namespace polyprim {

struct ValuationProfile {
  unsigned long a = 0;  // 2-adic valuation
  unsigned long b = 0;  // 3-adic valuation
  friend bool operator==(const ValuationProfile&, const ValuationProfile&) = default;
};

struct ThresholdDetail {
  Natural value;       // 0 when no clause applies
  std::string clause;  // "2^(3a)", "3^(3b-4)", "2^a*3^(2b)" or "none"
  friend bool operator==(const ThresholdDetail&, const ThresholdDetail&) = default;
};
ThresholdDetail lemma_threshold_detail(PolygonKind kind,
                                       const ValuationProfile& profile);
Natural lemma_threshold(PolygonKind kind, const ValuationProfile& profile);

struct ValuationEvidence {
  Natural n;
  ValuationProfile profile;
  Natural threshold;
  std::string clause;
  friend bool operator==(const ValuationEvidence&, const ValuationEvidence&) = default;
};

// Fires (returns evidence) when n <= lemma_threshold at n's own full
// valuations: no thick polygon of this kind has n points. Rejects n = 0.
std::optional<ValuationEvidence> valuation_test(PolygonKind kind,
                                                const Natural& n);

struct LemmaViolation {
  PolygonOrder order;
  Natural count;
  std::string clause;
  friend bool operator==(const LemmaViolation&, const LemmaViolation&) = default;
};

struct LemmaReport {
  PolygonKind kind = PolygonKind::Hexagon;
  Natural cap;
  unsigned long orders_checked = 0;
  std::vector<LemmaViolation> violations;
};

// Checks every admissible order with point count <= cap against each clause
// above and against valuation_test (which must never eliminate a realised
// count). cap <= 10^9.
LemmaReport lemma_oracle(PolygonKind kind, const Natural& cap);

}  // namespace polyprim
