#include "polyprim/catalogue.hpp"

#include <stdexcept>

namespace polyprim {

namespace {

void check_m(unsigned long m) {
  if (m < 3 || m % 2 == 0)
    throw std::invalid_argument("field parameter m must be odd and >= 3");
}

Natural family_order_at(FamilyKind family, const Natural& q) {
  switch (family) {
    case FamilyKind::Suzuki:
      return q * q * (q * q + 1) * (q - 1);
    case FamilyKind::SmallRee:
      return pow_ui(q, 3) * (pow_ui(q, 3) + 1) * (q - 1);
    default:
      return pow_ui(q, 12) * (pow_ui(q, 6) + 1) * (pow_ui(q, 4) - 1) *
             (pow_ui(q, 3) + 1) * (q - 1);
  }
}

Natural exact_div(const Natural& num, const Natural& den) {
  if (den == 0 || num % den != 0)
    throw std::logic_error("display expression is not an integer");
  return num / den;
}

// Ascending prime divisors of m by trial division (m is small).
std::vector<unsigned long> prime_divisors(unsigned long m) {
  std::vector<unsigned long> out;
  unsigned long n = m;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

// q0 = p^ell rendered into the label / structure text.
std::string q0_text(unsigned long p, unsigned long ell) {
  return pow_ui(Natural(p), ell).get_str();
}

std::vector<CatalogueCase> suzuki_cases(unsigned long m) {
  Natural q = field_size(FamilyKind::Suzuki, m);
  Natural root = pow_ui(2, (m + 1) / 2);  // sqrt(2q)
  std::vector<CatalogueCase> cases;
  auto add = [&](CatalogueCase c) {
    c.family = FamilyKind::Suzuki;
    c.m = m;
    c.index = cases.size();
    cases.push_back(std::move(c));
  };

  CatalogueCase parabolic;
  parabolic.label = "Sz:(i)";
  parabolic.structure = "E_q.E_q.C_{q-1}";
  parabolic.two_transitive = true;
  parabolic.stabiliser_order = q * q * (q - 1);
  add(parabolic);

  CatalogueCase dihedral;
  dihedral.label = "Sz:(ii)";
  dihedral.structure = "D_{2(q-1)}";
  dihedral.stabiliser_order = 2 * (q - 1);
  dihedral.display.hexagon = exact_div(q * q * (q * q + 1), 2);
  dihedral.display.octagon = dihedral.display.hexagon;
  add(dihedral);

  for (int sign : {+1, -1}) {
    CatalogueCase torus;
    torus.label = sign > 0 ? "Sz:(iii)+" : "Sz:(iii)-";
    torus.structure = sign > 0 ? "C_{q+sqrt(2q)+1}:C_4" : "C_{q-sqrt(2q)+1}:C_4";
    torus.stabiliser_order = 4 * (q + sign * root + 1);
    // The published index pairs the stabiliser's torus sign with the
    // opposite sign in the remaining factor of q^2+1.
    torus.display.hexagon =
        exact_div(q * q * (q - sign * root + 1) * (q - 1), 4);
    torus.display.octagon = torus.display.hexagon;
    add(torus);
  }

  for (unsigned long r : prime_divisors(m)) {
    unsigned long ell = m / r;
    if (ell < 3) continue;  // the subfield group must exceed Sz(2)
    CatalogueCase sub;
    sub.label = "Sz:(iv) q0=" + q0_text(2, ell);
    sub.structure = "Sz(" + q0_text(2, ell) + ")";
    sub.subfield = SubfieldParams{ell, r};
    sub.stabiliser_order = family_order_at(FamilyKind::Suzuki, pow_ui(2, ell));
    sub.display.hexagon =
        exact_div(family_order_at(FamilyKind::Suzuki, q), sub.stabiliser_order);
    sub.display.octagon = sub.display.hexagon;
    add(sub);
  }
  return cases;
}

std::vector<CatalogueCase> small_ree_cases(unsigned long m) {
  Natural q = field_size(FamilyKind::SmallRee, m);
  Natural root = pow_ui(3, (m + 1) / 2);  // sqrt(3q)
  std::vector<CatalogueCase> cases;
  auto add = [&](CatalogueCase c) {
    c.family = FamilyKind::SmallRee;
    c.m = m;
    c.index = cases.size();
    cases.push_back(std::move(c));
  };

  CatalogueCase parabolic;
  parabolic.label = "2G2:(i)";
  parabolic.structure = "E_q.E_q.E_q.C_{q-1}";
  parabolic.two_transitive = true;
  parabolic.stabiliser_order = pow_ui(q, 3) * (q - 1);
  add(parabolic);

  CatalogueCase psl;
  psl.label = "2G2:(ii)";
  psl.structure = "C_2 x PSL_2(q)";
  psl.stabiliser_order = q * (q * q - 1);
  psl.display.hexagon = q * q * (q * q - q + 1);
  psl.display.octagon = psl.display.hexagon;
  add(psl);

  CatalogueCase involution;
  involution.label = "2G2:(iii)";
  involution.structure = "(E_4 x D_{(q+1)/2}):C_3";
  involution.stabiliser_order = 6 * (q + 1);
  involution.display.hexagon =
      exact_div(pow_ui(q, 3) * (q - 1) * (q * q - q + 1), 6);
  involution.display.octagon =
      exact_div(2 * pow_ui(3, 3 * m - 1) * (pow_ui(3, 3 * m) + 1), 4);
  add(involution);

  for (int sign : {+1, -1}) {
    CatalogueCase torus;
    torus.label = sign > 0 ? "2G2:(iv)+" : "2G2:(iv)-";
    torus.structure =
        sign > 0 ? "C_{q+sqrt(3q)+1}:C_6" : "C_{q-sqrt(3q)+1}:C_6";
    torus.stabiliser_order = 6 * (q + sign * root + 1);
    torus.display.hexagon =
        pow_ui(q, 3) * (q * q - 1) * (q - sign * root + 1);
    torus.display.octagon = torus.display.hexagon;
    add(torus);
  }

  for (unsigned long r : prime_divisors(m)) {
    unsigned long ell = m / r;
    CatalogueCase sub;
    sub.label = "2G2:(v) q0=" + q0_text(3, ell);
    sub.structure = "2G2(" + q0_text(3, ell) + ")";
    sub.subfield = SubfieldParams{ell, r};
    sub.stabiliser_order =
        family_order_at(FamilyKind::SmallRee, pow_ui(3, ell));
    sub.display.hexagon = exact_div(family_order_at(FamilyKind::SmallRee, q),
                                    sub.stabiliser_order);
    sub.display.octagon = sub.display.hexagon;
    add(sub);
  }
  return cases;
}

std::vector<CatalogueCase> large_ree_cases(unsigned long m) {
  Natural q = field_size(FamilyKind::LargeRee, m);
  Natural root = pow_ui(2, (m + 1) / 2);  // sqrt(2q)
  Natural order = family_order_at(FamilyKind::LargeRee, q);
  std::vector<CatalogueCase> cases;
  auto add = [&](CatalogueCase c) {
    c.family = FamilyKind::LargeRee;
    c.m = m;
    c.index = cases.size();
    cases.push_back(std::move(c));
  };

  CatalogueCase p1;
  p1.label = "2F4:P1";
  p1.structure = "[q^10]:(Sz(q) x C_{q-1})";
  p1.parabolic = 1;
  p1.stabiliser_order = pow_ui(q, 12) * (q * q + 1) * (q - 1) * (q - 1);
  p1.display.hexagon = (pow_ui(q, 4) - q * q + 1) * (pow_ui(q, 3) + 1) *
                       (q * q + 1) * (q + 1);
  add(p1);

  CatalogueCase p2;
  p2.label = "2F4:P2";
  p2.structure = "[q^11]:GL_2(q)";
  p2.parabolic = 2;
  p2.stabiliser_order = pow_ui(q, 12) * (q * q - 1) * (q - 1);
  p2.display.hexagon = (pow_ui(q, 4) - q * q + 1) * (q * q + 1) *
                       (q * q + 1) * (pow_ui(q, 3) + 1);
  add(p2);

  Natural unitary_display =
      exact_div(pow_ui(q, 9) * (pow_ui(q, 6) + 1) * (q * q + 1) * (q - 1), 2);
  CatalogueCase su;
  su.label = "2F4:(iii)";
  su.structure = "SU_3(q):C_2";
  su.stabiliser_order = 2 * pow_ui(q, 3) * (pow_ui(q, 3) + 1) * (q * q - 1);
  su.display.hexagon = unitary_display;
  su.display.octagon = unitary_display;
  add(su);

  CatalogueCase pgu;
  pgu.label = "2F4:(iv)";
  pgu.structure = "PGU_3(q):C_2";
  pgu.stabiliser_order = su.stabiliser_order;
  pgu.display = su.display;
  add(pgu);

  CatalogueCase wreath;
  wreath.label = "2F4:(v)";
  wreath.structure = "Sz(q) wr C_2";
  wreath.stabiliser_order =
      2 * pow_ui(q, 4) * pow_ui(q * q + 1, 2) * pow_ui(q - 1, 2);
  wreath.display.hexagon =
      exact_div(pow_ui(q, 8) * (pow_ui(q, 4) - q * q + 1) *
                    (pow_ui(q, 3) + 1) * (q + 1),
                2);
  wreath.display.octagon = wreath.display.hexagon;
  add(wreath);

  CatalogueCase symplectic;
  symplectic.label = "2F4:(vi)";
  symplectic.structure = "Sp_4(q):C_2";
  symplectic.stabiliser_order =
      2 * pow_ui(q, 4) * (pow_ui(q, 4) - 1) * (q * q - 1);
  symplectic.display.hexagon = exact_div(
      pow_ui(q, 8) * (pow_ui(q, 6) + 1) * (q * q - q + 1), 2);
  symplectic.display.octagon = symplectic.display.hexagon;
  add(symplectic);

  for (unsigned long r : prime_divisors(m)) {
    unsigned long ell = m / r;
    CatalogueCase sub;
    sub.label = "2F4:(vii) q0=" + q0_text(2, ell);
    sub.structure = "2F4(" + q0_text(2, ell) + ")";
    sub.subfield = SubfieldParams{ell, r};
    sub.stabiliser_order =
        family_order_at(FamilyKind::LargeRee, pow_ui(2, ell));
    sub.display.hexagon = exact_div(order, sub.stabiliser_order);
    sub.display.octagon = sub.display.hexagon;
    add(sub);
  }

  CatalogueCase quad;
  quad.label = "2F4:(viii)";
  quad.structure = "(C_{q+1} x C_{q+1}):GL_2(3)";
  quad.stabiliser_order = 48 * pow_ui(q + 1, 2);
  add(quad);

  for (int sign : {+1, -1}) {
    CatalogueCase torus;
    torus.label = sign > 0 ? "2F4:(ix)+" : "2F4:(ix)-";
    torus.structure = sign > 0 ? "C_{(q+sqrt(2q)+1)^2}:[96]"
                               : "C_{(q-sqrt(2q)+1)^2}:[96]";
    torus.stabiliser_order = 96 * pow_ui(q + sign * root + 1, 2);
    add(torus);
  }

  for (int sign : {+1, -1}) {
    CatalogueCase torus;
    torus.label = sign > 0 ? "2F4:(x)+" : "2F4:(x)-";
    torus.structure = sign > 0 ? "C_{q^2+q+1+sqrt(2q)(q+1)}:C_12"
                               : "C_{q^2+q+1-sqrt(2q)(q+1)}:C_12";
    torus.stabiliser_order = 12 * (q * q + q + 1 + sign * root * (q + 1));
    add(torus);
  }
  return cases;
}

}  // namespace

const char* family_token(FamilyKind family) {
  switch (family) {
    case FamilyKind::Suzuki:
      return "sz";
    case FamilyKind::SmallRee:
      return "ree-small";
    default:
      return "ree-large";
  }
}

const char* family_display(FamilyKind family) {
  switch (family) {
    case FamilyKind::Suzuki:
      return "Sz(q)";
    case FamilyKind::SmallRee:
      return "2G2(q)";
    default:
      return "2F4(q)";
  }
}

unsigned long base_prime(FamilyKind family) {
  return family == FamilyKind::SmallRee ? 3 : 2;
}

Natural field_size(FamilyKind family, unsigned long m) {
  check_m(m);
  return pow_ui(Natural(base_prime(family)), m);
}

Natural group_order(FamilyKind family, unsigned long m) {
  return family_order_at(family, field_size(family, m));
}

std::vector<CatalogueCase> enumerate_cases(FamilyKind family,
                                           unsigned long m) {
  check_m(m);
  switch (family) {
    case FamilyKind::Suzuki:
      return suzuki_cases(m);
    case FamilyKind::SmallRee:
      return small_ree_cases(m);
    default:
      return large_ree_cases(m);
  }
}

CatalogueCase find_case(FamilyKind family, unsigned long m,
                        const std::string& label) {
  for (CatalogueCase& c : enumerate_cases(family, m))
    if (c.label == label) return std::move(c);
  throw std::invalid_argument("no catalogue case labelled '" + label +
                              "' for this family and m");
}

Natural case_point_count(const CatalogueCase& c) {
  Natural order = group_order(c.family, c.m);
  if (c.stabiliser_order == 0 || order % c.stabiliser_order != 0)
    throw std::logic_error("stabiliser order does not divide the group order");
  return order / c.stabiliser_order;
}

std::vector<Natural> parabolic_subdegrees(const CatalogueCase& c) {
  if (!c.parabolic)
    throw std::invalid_argument(
        "parabolic_subdegrees: case is not a parabolic");
  Natural q = field_size(c.family, c.m);
  if (*c.parabolic == 1) {
    Natural f = q * q + 1;
    return {q * f, pow_ui(q, 4) * f, pow_ui(q, 7) * f, pow_ui(q, 10)};
  }
  Natural f = q + 1;
  return {q * q * f, pow_ui(q, 5) * f, pow_ui(q, 8) * f, pow_ui(q, 11)};
}

}  // namespace polyprim
