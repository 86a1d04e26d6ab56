#pragma once

#include <cstdint>

#include "reslab/arith.hpp"

// Products over reduced residue systems: membership in the sign-determining
// family A, the full residue product (Gauss/Wilson), the shifted product
// prod(x + c) over residues c, and its prediction from a divisor split plus
// a Chinese-remainder reconstruction.

namespace reslab {

// Structural forms of |m| that put m in the family A (product of the
// reduced residues is -1 mod m); everything else multiplies to +1.
enum class ClassAForm {
  Zero,                // m = 0
  PowerOfTwoSmall,     // |m| = 2^alpha, alpha in {0,1,2}
  OddPrimePower,       // |m| = p^beta, p odd prime
  TwiceOddPrimePower,  // |m| = 2 p^beta, p odd prime
  NotInA,
};

struct ClassAVerdict {
  bool member = false;
  ClassAForm form = ClassAForm::NotInA;
  // Structural witness: p/beta for (twice) odd prime powers, alpha for
  // small powers of two. Zero elsewhere.
  std::int64_t prime = 0;
  std::int64_t exponent = 0;
};

/// Classifies m against the forms above. Accepts any m, including 0;
/// membership ignores the sign of m.
ClassAVerdict classify_a(std::int64_t m);

/// -1 if m is in A, +1 otherwise. Rejects 0.
int gauss_sign(std::int64_t m);

/// Product of the reduced residues of |m|, canonical mod |m|.
std::int64_t residue_product(std::int64_t m);

/// Product of (x + c) over the reduced residues c of |m|, canonical mod |m|.
/// Depends only on x mod |m|.
std::int64_t shifted_residue_product(std::int64_t x, std::int64_t m);

// Split of |m| = d * m_prime with gcd(d, m_prime) = 1: d collects the prime
// powers of |m| whose primes divide x, m_prime the rest.
struct SplitDm {
  std::int64_t d = 1;
  std::int64_t m_prime = 1;
};

/// Computes the split for (x, m). x = 0 gives d = |m|, m_prime = 1.
SplitDm common_divisor_split(std::int64_t x, std::int64_t m);

// Particular solution of k2 * m_prime - k1 * d = eps.
struct DiophSolution {
  std::int64_t k1 = 0;
  std::int64_t k2 = 0;
};

/// Solves k2*m_prime - k1*d = eps for coprime d, m_prime and eps = +-1.
DiophSolution dioph_particular(std::int64_t d, std::int64_t m_prime, int eps);

/// Predicted value of shifted_residue_product(x, m): the unique v in
/// [0, |m|) with v = gauss_sign(m) (mod d) and v = 0 (mod m_prime).
std::int64_t predict_shifted_product(std::int64_t x, std::int64_t m);

/// Product of the reduced residues of |m| except the largest (|m| - 1),
/// canonical mod |m|. Requires |m| >= 2. Equals -gauss_sign(m) mod |m|.
std::int64_t leibniz_product(std::int64_t m);

}  // namespace reslab
