#include "reslab/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace reslab::oracle {

namespace {

// Local copies of the elementary routines. Kept separate from reslab::arith
// on purpose; see the header note.

std::int64_t local_gcd(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

bool local_is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::int64_t local_mod(std::int64_t v, std::int64_t n) {
  const std::int64_t r = v % n;
  return r < 0 ? r + n : r;
}

constexpr std::int64_t kBruteBound = 100'000;

// p^e, guarded against running past the brute-force bound.
std::int64_t checked_pow(std::int64_t p, std::int64_t e) {
  std::int64_t v = 1;
  for (std::int64_t i = 0; i < e; ++i) {
    if (v > kBruteBound / p)
      throw std::out_of_range("oracle: prime power exceeds brute-force bound");
    v *= p;
  }
  return v;
}

std::vector<std::int64_t> residues_by_gcd(std::int64_t n) {
  std::vector<std::int64_t> out;
  if (n == 1) {
    out.push_back(0);
    return out;
  }
  for (std::int64_t c = 1; c < n; ++c)
    if (local_gcd(c, n) == 1) out.push_back(c);
  return out;
}

}  // namespace

std::string_view lemma_name(LemmaId id) {
  switch (id) {
    case LemmaId::ShiftInvariance:
      return "shift_invariance";
    case LemmaId::PrimePowerPartition:
      return "prime_power_partition";
    case LemmaId::ZeroRepresentative:
      return "zero_representative";
  }
  return "unknown";
}

LemmaCheck lemma1_shift_check(std::int64_t p, std::int64_t alpha,
                              std::int64_t beta, std::int64_t k) {
  if (!local_is_prime(p)) throw std::domain_error("lemma1: p must be prime");
  if (alpha < 1 || beta < 1)
    throw std::domain_error("lemma1: alpha and beta must be positive");

  LemmaCheck check;
  check.lemma = LemmaId::ShiftInvariance;
  check.params = {{"p", p}, {"alpha", alpha}, {"beta", beta}, {"k", k}};

  const std::int64_t pa = checked_pow(p, alpha);
  const std::vector<std::int64_t> residues = residues_by_gcd(pa);
  // k*p^beta mod p^alpha, computed factor by factor to avoid overflow.
  std::int64_t shift = local_mod(k, pa);
  for (std::int64_t i = 0; i < beta; ++i) shift = local_mod(shift * p, pa);

  std::vector<std::int64_t> shifted;
  shifted.reserve(residues.size());
  for (const std::int64_t c : residues) shifted.push_back(local_mod(c + shift, pa));
  std::sort(shifted.begin(), shifted.end());

  check.passed = shifted == residues;
  if (!check.passed) {
    for (std::size_t i = 0; i < residues.size(); ++i) {
      if (shifted[i] != residues[i]) {
        check.detail = "mismatch at position " + std::to_string(i) + ": got " +
                       std::to_string(shifted[i]) + ", want " +
                       std::to_string(residues[i]);
        break;
      }
    }
  }
  return check;
}

LemmaCheck lemma2_partition_check(std::int64_t m, std::int64_t p) {
  if (m == 0) throw std::domain_error("lemma2: modulus must be nonzero");
  if (!local_is_prime(p)) throw std::domain_error("lemma2: p must be prime");
  const std::int64_t n = m < 0 ? -m : m;
  if (n > kBruteBound) throw std::out_of_range("lemma2: modulus exceeds brute-force bound");
  if (n % p != 0) throw std::domain_error("lemma2: p must divide m");

  LemmaCheck check;
  check.lemma = LemmaId::PrimePowerPartition;
  check.params = {{"m", m}, {"p", p}};

  std::int64_t pa = 1;
  std::int64_t rest = n;
  while (rest % p == 0) {
    rest /= p;
    pa *= p;
  }
  // Expected: each reduced class mod pa occurs phi(n / pa) times.
  std::int64_t expected = 0;
  for (std::int64_t c = 1; c <= rest; ++c)
    if (local_gcd(c, rest) == 1) ++expected;

  std::vector<std::int64_t> counts(static_cast<std::size_t>(pa), 0);
  for (const std::int64_t c : residues_by_gcd(n))
    ++counts[static_cast<std::size_t>(local_mod(c, pa))];

  check.passed = true;
  for (std::int64_t r = 0; r < pa; ++r) {
    const bool coprime = pa == 1 ? r == 0 : local_gcd(r, pa) == 1;
    const std::int64_t want = coprime ? expected : 0;
    if (counts[static_cast<std::size_t>(r)] != want) {
      check.passed = false;
      check.detail = "class " + std::to_string(r) + " mod " + std::to_string(pa) +
                     " occurs " + std::to_string(counts[static_cast<std::size_t>(r)]) +
                     " times, want " + std::to_string(want);
      break;
    }
  }
  return check;
}

LemmaCheck lemma3_zero_rep_check(std::int64_t b, std::int64_t q) {
  if (q < 2) throw std::domain_error("lemma3: q must be at least 2");
  if (q > kBruteBound) throw std::out_of_range("lemma3: q exceeds brute-force bound");
  if (local_gcd(b, q) != 1) throw std::domain_error("lemma3: b and q must be coprime");

  LemmaCheck check;
  check.lemma = LemmaId::ZeroRepresentative;
  check.params = {{"b", b}, {"q", q}};

  for (std::int64_t c = 1; c < q; ++c) {
    if (local_gcd(c, q) != 1) continue;
    if (local_mod(b + c, q) == 0) {
      check.passed = true;
      check.detail = "c=" + std::to_string(c);
      return check;
    }
  }
  check.passed = false;
  check.detail = "no residue completes b to a multiple of q";
  return check;
}

std::int64_t brute_shifted_product(std::int64_t x, std::int64_t m) {
  if (m == 0) throw std::domain_error("brute_shifted_product: modulus must be nonzero");
  const std::int64_t n = m < 0 ? -m : m;
  if (n > kBruteBound)
    throw std::out_of_range("brute_shifted_product: modulus exceeds brute-force bound");
  if (n == 1) return 0;

  std::int64_t acc = 1;
  for (std::int64_t c = 1; c < n; ++c) {
    if (local_gcd(c, n) != 1) continue;
    acc = local_mod(acc * local_mod(x + c, n), n);
  }
  return acc;
}

}  // namespace reslab::oracle
