#include "reslab/arith.hpp"

#include <limits>
#include <stdexcept>
#include <utility>

namespace reslab {

namespace {

constexpr std::int64_t kI64Max = std::numeric_limits<std::int64_t>::max();

// Magnitude as unsigned, well defined for INT64_MIN too.
std::uint64_t magnitude(std::int64_t v) {
  return v < 0 ? 0ull - static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
}

void check_factor_bound(std::int64_t m) {
  if (m > kMaxFactorInput || m < -kMaxFactorInput)
    throw std::out_of_range("factorization input exceeds 1e12 bound");
}

void check_modulus_bound(std::int64_t m) {
  if (m > kMaxModulus || m < -kMaxModulus)
    throw std::out_of_range("modulus exceeds 2^31-1 bound");
}

// Product of canonical residues; requires 0 <= a,b < n <= kMaxModulus so the
// intermediate stays under 2^62.
std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t n) {
  return (a * b) % n;
}

}  // namespace

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  std::uint64_t x = magnitude(a);
  std::uint64_t y = magnitude(b);
  while (y != 0) {
    x %= y;
    std::swap(x, y);
  }
  if (x > static_cast<std::uint64_t>(kI64Max))
    throw std::overflow_error("gcd result exceeds int64 range");
  return static_cast<std::int64_t>(x);
}

Bezout ext_gcd(std::int64_t a, std::int64_t b) {
  if (a == 0 && b == 0) throw std::domain_error("ext_gcd(0,0) is undefined");
  if (a == std::numeric_limits<std::int64_t>::min() ||
      b == std::numeric_limits<std::int64_t>::min())
    throw std::out_of_range("ext_gcd input magnitude not representable");

  std::int64_t r0 = a < 0 ? -a : a, r1 = b < 0 ? -b : b;
  std::int64_t s0 = 1, s1 = 0;
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    s0 -= q * s1;
    std::swap(s0, s1);
    t0 -= q * t1;
    std::swap(t0, t1);
  }
  Bezout out;
  out.g = r0;
  out.u = a < 0 ? -s0 : s0;
  out.v = b < 0 ? -t0 : t0;
  return out;
}

std::int64_t Factorization::value() const {
  std::int64_t v = sign;
  for (const auto& pp : factors)
    for (std::int64_t i = 0; i < pp.exponent; ++i) v *= pp.prime;
  return v;
}

Factorization factorize(std::int64_t m) {
  if (m == 0) throw std::domain_error("factorize(0) is undefined");
  check_factor_bound(m);

  Factorization out;
  out.sign = m < 0 ? -1 : 1;
  std::int64_t n = m < 0 ? -m : m;

  auto strip = [&](std::int64_t p) {
    std::int64_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.factors.push_back({p, e});
  };

  strip(2);
  for (std::int64_t d = 3; d * d <= n; d += 2) strip(d);
  if (n > 1) out.factors.push_back({n, 1});
  return out;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  check_factor_bound(n);
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::int64_t phi(std::int64_t m) {
  if (m == 0) throw std::domain_error("phi(0) is undefined");
  const Factorization f = factorize(m);
  std::int64_t r = m < 0 ? -m : m;
  for (const auto& pp : f.factors) r = r / pp.prime * (pp.prime - 1);
  return r;
}

std::int64_t canonical(std::int64_t v, std::int64_t m) {
  if (m == 0) throw std::domain_error("modulus must be nonzero");
  if (m == std::numeric_limits<std::int64_t>::min())
    throw std::out_of_range("modulus magnitude not representable");
  const std::int64_t n = m < 0 ? -m : m;
  const std::int64_t r = v % n;
  return r < 0 ? r + n : r;
}

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t m) {
  if (m == 0) throw std::domain_error("mod_pow modulus must be nonzero");
  if (exp < 0) throw std::domain_error("mod_pow exponent must be nonnegative");
  check_modulus_bound(m);
  const std::int64_t n = m < 0 ? -m : m;
  std::int64_t acc = 1 % n;
  std::int64_t b = canonical(base, n);
  while (exp > 0) {
    if (exp & 1) acc = mul_mod(acc, b, n);
    b = mul_mod(b, b, n);
    exp >>= 1;
  }
  return acc;
}

ResidueSystem reduced_residues(std::int64_t m) {
  if (m == 0) throw std::domain_error("reduced_residues(0) is undefined");
  if (m > kMaxResidueEnumeration || m < -kMaxResidueEnumeration)
    throw std::out_of_range("modulus exceeds residue enumeration bound");
  const std::int64_t n = m < 0 ? -m : m;
  ResidueSystem out;
  out.modulus = n;
  if (n == 1) {
    out.residues = {0};
    return out;
  }
  for (std::int64_t c = 1; c < n; ++c)
    if (gcd(c, n) == 1) out.residues.push_back(c);
  return out;
}

std::int64_t crt_pair(std::int64_t r1, std::int64_t m1, std::int64_t r2,
                      std::int64_t m2) {
  if (m1 < 1 || m2 < 1) throw std::domain_error("crt_pair moduli must be positive");
  check_modulus_bound(m1);
  check_modulus_bound(m2);
  if (gcd(m1, m2) != 1) throw std::domain_error("crt_pair moduli must be coprime");

  const std::int64_t a1 = canonical(r1, m1);
  const std::int64_t a2 = canonical(r2, m2);
  if (m1 == 1) return a2;
  if (m2 == 1) return a1;
  // v = a1 + m1*t with t = (a2 - a1) * m1^-1 (mod m2).
  const Bezout bz = ext_gcd(m1, m2);
  const std::int64_t inv = canonical(bz.u, m2);
  const std::int64_t t = mul_mod(canonical(a2 - a1, m2), inv, m2);
  return a1 + m1 * t;
}

}  // namespace reslab
