#include "polyprim/arith.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace polyprim {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

constexpr u64 kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

// Deterministic for all n < 3.3e24, hence for every u64.
bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : kWitnesses) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (u64 a : kWitnesses) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 rho_step(u64 x, u64 c, u64 n) {
  u64 v = mulmod(x, x, n) + c;
  if (v >= n) v -= n;
  return v;
}

// Floyd-cycle rho round with polynomial x^2+c. Returns a factor in (1,n),
// n itself when the cycle closed without one, or 0 when the budget ran out.
u64 rho_round_u64(u64 n, u64 c, u64& budget) {
  u64 x = 2, y = 2;
  while (budget > 0) {
    --budget;
    x = rho_step(x, c, n);
    y = rho_step(rho_step(y, c, n), c, n);
    u64 diff = x > y ? x - y : y - x;
    if (diff == 0) return n;
    u64 g = std::gcd(diff, n);
    if (g != 1) return g;
  }
  return 0;
}

void factor_u64_into(u64 n, const FactorEffort& effort, u64& rho_budget,
                     std::map<Natural, unsigned long>& out, Natural& cofactor) {
  for (u64 p : {2ull, 3ull, 5ull}) {
    while (n % p == 0) {
      ++out[Natural(static_cast<unsigned long>(p))];
      n /= p;
    }
  }
  u64 trial = std::min<u64>(effort.trial_limit, u64(1) << 31);
  for (u64 p = 7; p <= trial && p * p <= n; p += 6) {
    // 6k+1 / 6k+5 pattern starting at 7, 11, 13, 17, ...
    for (u64 q : {p, p + 4}) {
      while (n % q == 0) {
        ++out[Natural(static_cast<unsigned long>(q))];
        n /= q;
      }
    }
  }
  if (n == 1) return;
  if (u128(n) <= u128(trial) * trial || is_prime_u64(n)) {
    // below the square of the trial bound a survivor is prime
    ++out[Natural(static_cast<unsigned long>(n))];
    return;
  }
  for (u64 c = 1; rho_budget > 0; ++c) {
    u64 g = rho_round_u64(n, c, rho_budget);
    if (g == 0) break;
    if (g == n) continue;  // cycle without a factor: next polynomial
    factor_u64_into(g, effort, rho_budget, out, cofactor);
    factor_u64_into(n / g, effort, rho_budget, out, cofactor);
    return;
  }
  cofactor *= Natural(static_cast<unsigned long>(n));
}

Natural rho_round_mpz(const Natural& n, unsigned long c, u64& budget) {
  Natural x = 2, y = 2, diff, g;
  auto step = [&](Natural& v) {
    v = v * v + c;
    v %= n;
  };
  while (budget > 0) {
    --budget;
    step(x);
    step(y);
    step(y);
    diff = x > y ? x - y : y - x;
    if (diff == 0) return n;
    mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    if (g != 1) return g;
  }
  return 0;
}

void factor_mpz_into(const Natural& n_in, const FactorEffort& effort,
                     u64& rho_budget, std::map<Natural, unsigned long>& out,
                     Natural& cofactor) {
  Natural n = n_in;
  if (mpz_fits_ulong_p(n.get_mpz_t())) {
    factor_u64_into(mpz_get_ui(n.get_mpz_t()), effort, rho_budget, out,
                    cofactor);
    return;
  }
  auto strip = [&](unsigned long p) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      ++out[Natural(p)];
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
    }
  };
  strip(2);
  strip(3);
  strip(5);
  for (u64 p = 7; p <= effort.trial_limit; p += 6) {
    strip(static_cast<unsigned long>(p));
    strip(static_cast<unsigned long>(p + 4));
    if (mpz_fits_ulong_p(n.get_mpz_t())) break;
  }
  if (n == 1) return;
  if (mpz_fits_ulong_p(n.get_mpz_t())) {
    factor_u64_into(mpz_get_ui(n.get_mpz_t()), effort, rho_budget, out,
                    cofactor);
    return;
  }
  int prob = mpz_probab_prime_p(n.get_mpz_t(), 40);
  if (prob > 0) {
    ++out[n];
    return;
  }
  for (unsigned long c = 1; rho_budget > 0; ++c) {
    Natural g = rho_round_mpz(n, c, rho_budget);
    if (g == 0) break;
    if (g == n) continue;
    factor_mpz_into(g, effort, rho_budget, out, cofactor);
    factor_mpz_into(n / g, effort, rho_budget, out, cofactor);
    return;
  }
  cofactor *= n;
}

void collect_divisors(const std::vector<PrimePower>& factors, std::size_t i,
                      const Natural& acc, const Natural* limit,
                      std::vector<Natural>& out) {
  if (i == factors.size()) {
    out.push_back(acc);
    return;
  }
  Natural v = acc;
  for (unsigned long e = 0;; ++e) {
    if (limit && v > *limit) break;
    collect_divisors(factors, i + 1, v, limit, out);
    if (e == factors[i].exponent) break;
    v *= factors[i].prime;
  }
}

}  // namespace

Natural pow_ui(const Natural& base, unsigned long exp) {
  Natural r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

unsigned long p_valuation(const Natural& p, const Natural& n) {
  if (n == 0) throw std::invalid_argument("p_valuation: n must be nonzero");
  if (classify_prime(p) == Primality::Composite)
    throw std::invalid_argument("p_valuation: p must be prime");
  Natural rest;
  return static_cast<unsigned long>(
      mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

SquareTest is_perfect_square(const Natural& n) {
  if (n < 0) throw std::invalid_argument("is_perfect_square: negative input");
  SquareTest result;
  Natural rem;
  mpz_sqrtrem(result.root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
  result.is_square = (rem == 0);
  return result;
}

Primality classify_prime(const Natural& n) {
  if (n < 2) return Primality::Composite;
  if (mpz_fits_ulong_p(n.get_mpz_t()))
    return is_prime_u64(mpz_get_ui(n.get_mpz_t())) ? Primality::Prime
                                                   : Primality::Composite;
  switch (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
    case 2:
      return Primality::Prime;
    case 1:
      return Primality::ProbablePrime;
    default:
      return Primality::Composite;
  }
}

bool Factorization::fully_certified() const {
  for (const auto& f : factors)
    if (f.certainty != PrimeCertainty::Certified) return false;
  return true;
}

Natural Factorization::reconstruct() const {
  Natural n = cofactor;
  for (const auto& f : factors) n *= pow_ui(f.prime, f.exponent);
  return n;
}

Factorization factorize(const Natural& n, const FactorEffort& effort) {
  if (n < 1) throw std::invalid_argument("factorize: n must be positive");
  Factorization result;
  if (n == 1) return result;
  std::map<Natural, unsigned long> found;
  u64 budget = effort.rho_iterations;
  factor_mpz_into(n, effort, budget, found, result.cofactor);
  for (const auto& [p, e] : found) {
    PrimeCertainty cert = classify_prime(p) == Primality::Prime
                              ? PrimeCertainty::Certified
                              : PrimeCertainty::Probable;
    result.factors.push_back(PrimePower{p, e, cert});
  }
  return result;
}

std::vector<Natural> divisors(const Factorization& f) {
  if (!f.complete())
    throw std::invalid_argument("divisors: incomplete factorization");
  std::vector<Natural> out;
  collect_divisors(f.factors, 0, Natural(1), nullptr, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Natural> divisors(const Factorization& f, const Natural& limit) {
  if (!f.complete())
    throw std::invalid_argument("divisors: incomplete factorization");
  std::vector<Natural> out;
  collect_divisors(f.factors, 0, Natural(1), &limit, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::strong_ordering cmp_scaled_power(const Natural& n, const Natural& base,
                                      unsigned long exponent,
                                      const Natural& num, const Natural& den) {
  if (den == 0) throw std::invalid_argument("cmp_scaled_power: zero denominator");
  if (n < 0 || base < 0 || num < 0 || den < 0)
    throw std::invalid_argument("cmp_scaled_power: negative input");
  Natural lhs = n * den;
  Natural rhs = pow_ui(base, exponent) * num;
  int c = cmp(lhs, rhs);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace polyprim
