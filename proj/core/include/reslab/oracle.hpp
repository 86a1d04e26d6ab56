#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

// Brute-force diagnostics kept deliberately independent of the main modules:
// coprimality is decided by a local gcd per candidate and nothing here reuses
// the library's residue enumeration, so a bug in one path cannot confirm
// itself through the other. Reachable from the CLI via `selfcheck`.

namespace reslab::oracle {

enum class LemmaId { ShiftInvariance, PrimePowerPartition, ZeroRepresentative };

std::string_view lemma_name(LemmaId id);

struct LemmaCheck {
  LemmaId lemma = LemmaId::ShiftInvariance;
  std::map<std::string, std::int64_t> params;
  bool passed = false;
  std::string detail;  // counter-witness when failed, witness note otherwise
};

/// Shifting the reduced residues of p^alpha by k*p^beta permutes them mod
/// p^alpha. Rejects non-prime p.
LemmaCheck lemma1_shift_check(std::int64_t p, std::int64_t alpha,
                              std::int64_t beta, std::int64_t k);

/// Reduced residues of m reduce mod p^alpha (p^alpha || m) to exactly
/// phi(m / p^alpha) copies of the reduced residues of p^alpha. Rejects p
/// not dividing m.
LemmaCheck lemma2_partition_check(std::int64_t m, std::int64_t p);

/// For gcd(b, q) = 1, some reduced residue c of q has q | (b + c); the
/// witness is c = q - (b mod q). Rejects gcd(b, q) != 1.
LemmaCheck lemma3_zero_rep_check(std::int64_t b, std::int64_t q);

/// Independent recomputation of the shifted residue product, by direct
/// enumeration. Bounded to |m| <= 1e5.
std::int64_t brute_shifted_product(std::int64_t x, std::int64_t m);

}  // namespace reslab::oracle
