#pragma once

// Exact natural-number arithmetic on top of GMP. Every operation is
// deterministic: the same inputs (and the same effort bounds) always produce
// the same outputs. No floating point anywhere.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace polyprim {

// Non-negative arbitrary-precision integer. Operations taking a Natural
// validate non-negativity at the interface boundary.
using Natural = mpz_class;

Natural pow_ui(const Natural& base, unsigned long exp);

// Exponent of the largest power of p dividing n. Rejects n = 0 and non-prime
// p (the caller certifies primality; the check here is exact for p < 2^64).
unsigned long p_valuation(const Natural& p, const Natural& n);

struct SquareTest {
  bool is_square = false;
  Natural root;  // floor(sqrt(n)) whether or not n is a square
};
SquareTest is_perfect_square(const Natural& n);

enum class Primality { Composite, Prime, ProbablePrime };

// Deterministic (Composite / Prime) for n < 2^64. Above that, Composite is
// still exact but a prime answer may be ProbablePrime.
Primality classify_prime(const Natural& n);

enum class PrimeCertainty { Certified, Probable };

struct PrimePower {
  Natural prime;
  unsigned long exponent = 0;
  PrimeCertainty certainty = PrimeCertainty::Certified;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
  std::vector<PrimePower> factors;  // strictly increasing primes
  Natural cofactor = 1;             // unfactored remainder; 1 when complete
  bool complete() const { return cofactor == 1; }
  bool fully_certified() const;
  Natural reconstruct() const;  // cofactor * prod p^e
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

struct FactorEffort {
  unsigned long trial_limit = 100000;      // trial-division bound
  unsigned long rho_iterations = 2000000;  // total rho budget across rounds
};

// Deterministic for fixed (n, effort). Rejects n = 0. An exhausted effort
// budget leaves the unfactored part in cofactor, never a wrong factor.
Factorization factorize(const Natural& n, const FactorEffort& effort = {});

// All divisors (or all divisors <= limit), each exactly once, ascending.
// Rejects incomplete factorizations.
std::vector<Natural> divisors(const Factorization& f);
std::vector<Natural> divisors(const Factorization& f, const Natural& limit);

// Orders n against base^exponent * num / den without any rounding, by
// comparing n * den with num * base^exponent. Rejects den = 0.
std::strong_ordering cmp_scaled_power(const Natural& n, const Natural& base,
                                      unsigned long exponent,
                                      const Natural& num, const Natural& den);

}  // namespace polyprim
