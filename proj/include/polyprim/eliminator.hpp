#pragma once

// Decision pipeline for one catalogue case against one polygon kind. Tests
// run in a fixed order and the first decisive result wins; every test that
// ran leaves its transcript in the evidence, so each verdict can be rechecked
// by independent recomputation.

#include "polyprim/bounds.hpp"
#include "polyprim/catalogue.hpp"
#include "polyprim/polygon.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace polyprim {

enum class Outcome { Classical, Eliminated, Survives, Inconclusive };
const char* outcome_name(Outcome outcome);

// Test identifiers, in pipeline order.
inline constexpr const char* kTestTwoTransitive = "two-transitive";
inline constexpr const char* kTestRankPigeonhole = "rank-pigeonhole";
inline constexpr const char* kTestSubdegreePartition = "subdegree-partition";
inline constexpr const char* kTestValuation = "valuation";
inline constexpr const char* kTestRefinedOctagon = "refined-octagon";
inline constexpr const char* kTestParameterExistence = "parameter-existence";

struct AssignmentRecord {
  // block[i] in {2,4,6}: the distance class receiving subdegree i.
  std::array<int, 4> block{};
  Natural sum2, sum4, sum6;
  std::string result;  // "witness" or "rejected: <reason>"
  std::optional<PolygonOrder> witness;
  friend bool operator==(const AssignmentRecord&, const AssignmentRecord&) = default;
};

struct SubdegreeTranscript {
  std::vector<Natural> subdegrees;
  Natural point_count;
  std::vector<AssignmentRecord> records;  // all 36 surjective assignments
  std::vector<PolygonOrder> witnesses;
  friend bool operator==(const SubdegreeTranscript&, const SubdegreeTranscript&) = default;
};

// Hexagon hypothesis against a rank-5 action: the three distance classes
// around a point must each be a nonempty union of the four suborbits, so all
// 36 surjective assignments are solved exactly for (s,t). No witnesses means
// the hexagon hypothesis is impossible. Requires 1 + sum(subdegrees) == n.
SubdegreeTranscript subdegree_partition_test(
    const std::vector<Natural>& subdegrees, const Natural& n);

struct RefinedSubcase {
  std::string name;
  bool vacuous = false;
  bool closed = false;
  std::string detail;
  friend bool operator==(const RefinedSubcase&, const RefinedSubcase&) = default;
};

struct RefinedTranscript {
  bool applicable = false;  // all preconditions hold
  bool fired = false;       // applicable and every subcase closed
  std::string abstain_reason;
  unsigned long b = 0;  // 3-adic valuation of n
  Natural quotient;     // n / 3^b
  std::vector<RefinedSubcase> subcases;
  friend bool operator==(const RefinedTranscript&, const RefinedTranscript&) = default;
};

// Octagon-only sharpening for n = 3^b * k with v2(n) = 0, b >= 6, k coprime
// to 6 and 52^3 n^3 < 3^(7b+12) (the integer form of n < 3^(7b/3) * 81/52).
// Splits on c = v3(s+1), d = v3(st+1), c+d = b, and closes each range by an
// exact cross-multiplied comparison; the c = d/2 equality branch is closed by
// n differing from the single forced count 3^b((3^(2b/3)-1)^2+1). Fires
// (eliminates n) only when every subcase is closed.
RefinedTranscript refined_octagon_test(const Natural& n);

struct SolverTrace {
  bool attempted = false;
  bool decided = false;
  unsigned long divisors_examined = 0;
  std::vector<PolygonOrder> solutions;
  std::string note;
  friend bool operator==(const SolverTrace&, const SolverTrace&) = default;
};

struct Evidence {
  Natural point_count;
  std::vector<std::string> tests_attempted;
  std::optional<ValuationProfile> valuations;  // full v2/v3 of the count
  std::optional<Natural> threshold;
  std::optional<std::string> threshold_clause;
  std::optional<SubdegreeTranscript> subdegree;
  std::optional<RefinedTranscript> refined;
  std::optional<SolverTrace> solver;
  std::vector<std::string> notes;
  friend bool operator==(const Evidence&, const Evidence&) = default;
};

struct Verdict {
  Outcome outcome = Outcome::Inconclusive;
  std::string test;  // decisive (or final attempted) test identifier
  std::vector<PolygonOrder> witnesses;
  std::vector<std::string> reasons;
  Evidence evidence;
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

// Pipeline: two-transitive, rank-pigeonhole (octagon x parabolic -> the
// classical octagon or its dual), subdegree partition (hexagon x parabolic),
// valuation, refined octagon, parameter existence. Classical is only ever
// produced by the rank-pigeonhole stage; Survives carries witness orders
// whose point count matches; Inconclusive arises only from an incomplete
// factorization in the final stage.
Verdict evaluate_case(const CatalogueCase& c, PolygonKind kind,
                      const FactorEffort& effort = {});

}  // namespace polyprim
