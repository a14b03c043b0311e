#pragma once

// Case catalogue for the three families of Suzuki/Ree simple groups:
//   Sz(q)     = 2B2(q), q = 2^m
//   2G2(q),            q = 3^m
//   2F4(q),            q = 2^m
// with m odd and >= 3 throughout. Each catalogue case is one conjugacy class
// of maximal subgroups, the candidate point stabilisers of a point-primitive
// action; subfield rows are expanded one per admissible (ell, r) with
// q = (p^ell)^r and r prime.

#include "polyprim/arith.hpp"

#include <optional>
#include <string>
#include <vector>

namespace polyprim {

enum class FamilyKind { Suzuki, SmallRee, LargeRee };
const char* family_token(FamilyKind family);    // "sz" / "ree-small" / "ree-large"
const char* family_display(FamilyKind family);  // "Sz(q)" / "2G2(q)" / "2F4(q)"
unsigned long base_prime(FamilyKind family);

// q = p^m. Throws unless m is odd and >= 3.
Natural field_size(FamilyKind family, unsigned long m);
Natural group_order(FamilyKind family, unsigned long m);

struct SubfieldParams {
  unsigned long ell = 0;  // q0 = p^ell
  unsigned long r = 0;    // q = q0^r, r prime
  friend bool operator==(const SubfieldParams&, const SubfieldParams&) = default;
};

// Index values as printed in the published case analysis, evaluated exactly,
// split by which polygon kind's treatment printed them. Used for
// cross-checking only; verdicts always rest on the exact quotient.
struct IndexDisplay {
  std::optional<Natural> hexagon;
  std::optional<Natural> octagon;
  friend bool operator==(const IndexDisplay&, const IndexDisplay&) = default;
};

struct CatalogueCase {
  FamilyKind family = FamilyKind::Suzuki;
  unsigned long m = 0;
  unsigned long index = 0;  // position in the catalogue enumeration
  std::string label;        // e.g. "Sz:(ii)", "2G2:(iv)+", "2F4:P1"
  std::string structure;    // stabiliser shape, ASCII rendering
  bool two_transitive = false;           // parabolic of Sz / 2G2
  std::optional<unsigned> parabolic;     // 2F4 only: 1 or 2
  std::optional<SubfieldParams> subfield;
  Natural stabiliser_order;
  IndexDisplay display;
  friend bool operator==(const CatalogueCase&, const CatalogueCase&) = default;
};

// All candidate point-stabiliser classes for the family at this m, in
// catalogue order. Throws unless m is odd and >= 3.
std::vector<CatalogueCase> enumerate_cases(FamilyKind family, unsigned long m);

// Convenience lookup by label. Throws if the label is not in the catalogue.
CatalogueCase find_case(FamilyKind family, unsigned long m,
                        const std::string& label);

// |G| / |stabiliser|, checked exactly; throws if divisibility fails.
Natural case_point_count(const CatalogueCase& c);

// The four nontrivial suborbit sizes of a 2F4 parabolic action, ascending.
// P1 (octagon of order (q,q^2)): q(q^2+1), q^4(q^2+1), q^7(q^2+1), q^10.
// P2 (dual, order (q^2,q)):      q^2(q+1), q^5(q+1), q^8(q+1), q^11.
// Throws for non-parabolic cases.
std::vector<Natural> parabolic_subdegrees(const CatalogueCase& c);

}  // namespace polyprim
