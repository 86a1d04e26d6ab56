#pragma once

#include <cstdint>
#include <vector>

// Exact integer and modular arithmetic primitives. Everything here is a pure
// function; errors are reported with std::domain_error (invalid input) or
// std::out_of_range (input outside the documented bounds below).

namespace reslab {

// Largest modulus accepted by the modular routines. Canonical residues are
// below this, so every intermediate product fits in signed 64-bit.
inline constexpr std::int64_t kMaxModulus = 2147483647;  // 2^31 - 1

// Largest |m| accepted by factorize/phi (trial division up to 1e6).
inline constexpr std::int64_t kMaxFactorInput = 1'000'000'000'000;  // 1e12

// Largest |m| for which a reduced residue system is enumerated or folded.
inline constexpr std::int64_t kMaxResidueEnumeration = 10'000'000;  // 1e7

/// Nonnegative greatest common divisor; gcd(0,0) = 0.
std::int64_t gcd(std::int64_t a, std::int64_t b);

/// Result of the extended Euclidean algorithm: u*a + v*b = g = gcd(a,b).
struct Bezout {
  std::int64_t g = 0;
  std::int64_t u = 0;
  std::int64_t v = 0;
};

/// Extended gcd. Rejects (0,0).
Bezout ext_gcd(std::int64_t a, std::int64_t b);

struct PrimePower {
  std::int64_t prime = 0;
  std::int64_t exponent = 0;
  bool operator==(const PrimePower&) const = default;
};

// Sign and ordered prime powers of a nonzero integer. Primes are strictly
// increasing and exponents >= 1; +-1 factors to an empty list.
struct Factorization {
  int sign = 1;  // -1 or +1
  std::vector<PrimePower> factors;

  /// Reconstructs the factored integer exactly.
  std::int64_t value() const;
};

/// Trial-division factorization. Rejects 0 and |m| > kMaxFactorInput.
Factorization factorize(std::int64_t m);

/// Deterministic trial-division primality check (n <= kMaxFactorInput).
bool is_prime(std::int64_t n);

/// Euler totient of |m|; phi(+-1) = 1. Rejects 0.
std::int64_t phi(std::int64_t m);

/// Representative of v's class in [0, |m|). Rejects m = 0.
std::int64_t canonical(std::int64_t v, std::int64_t m);

/// base^exp reduced to [0, |m|), with 0^0 = 1. Rejects m = 0 and exp < 0.
std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t m);

// A modulus together with its sorted canonical residues coprime to it.
// The special case modulus 1 has residues = {0}.
struct ResidueSystem {
  std::int64_t modulus = 1;
  std::vector<std::int64_t> residues;

  std::int64_t phi() const { return static_cast<std::int64_t>(residues.size()); }
};

/// Enumerates the reduced residue system of |m|. Rejects 0 and
/// |m| > kMaxResidueEnumeration.
ResidueSystem reduced_residues(std::int64_t m);

/// Unique v in [0, m1*m2) with v = r1 (mod m1) and v = r2 (mod m2).
/// Requires m1, m2 >= 1 coprime.
std::int64_t crt_pair(std::int64_t r1, std::int64_t m1, std::int64_t r2,
                      std::int64_t m2);

}  // namespace reslab
