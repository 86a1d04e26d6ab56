#include "reslab/residues.hpp"

#include <stdexcept>
#include <string>

namespace reslab {

namespace {

std::int64_t require_streamable_modulus(std::int64_t m, const char* who) {
  if (m == 0) throw std::domain_error(std::string(who) + ": modulus must be nonzero");
  if (m > kMaxResidueEnumeration || m < -kMaxResidueEnumeration)
    throw std::out_of_range(std::string(who) + ": modulus exceeds residue enumeration bound");
  return m < 0 ? -m : m;
}

}  // namespace

ClassAVerdict classify_a(std::int64_t m) {
  ClassAVerdict v;
  if (m == 0) {
    v.member = true;
    v.form = ClassAForm::Zero;
    return v;
  }
  if (m > kMaxFactorInput || m < -kMaxFactorInput)
    throw std::out_of_range("classify_a: input exceeds 1e12 bound");

  std::int64_t n = m < 0 ? -m : m;
  if (n == 1 || n == 2 || n == 4) {
    v.member = true;
    v.form = ClassAForm::PowerOfTwoSmall;
    v.exponent = n == 1 ? 0 : (n == 2 ? 1 : 2);
    return v;
  }

  bool halved = false;
  if (n % 2 == 0) {
    n /= 2;
    halved = true;
    if (n % 2 == 0) return v;  // divisible by 4 and not 4 itself
  }
  // n is odd and > 1 here; membership needs n to be a full prime power.
  std::int64_t p = 0;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = n;  // n itself is prime
  std::int64_t beta = 0;
  while (n % p == 0) {
    n /= p;
    ++beta;
  }
  if (n != 1) return v;

  v.member = true;
  v.form = halved ? ClassAForm::TwiceOddPrimePower : ClassAForm::OddPrimePower;
  v.prime = p;
  v.exponent = beta;
  return v;
}

int gauss_sign(std::int64_t m) {
  if (m == 0) throw std::domain_error("gauss_sign(0) is undefined");
  return classify_a(m).member ? -1 : 1;
}

std::int64_t residue_product(std::int64_t m) {
  const std::int64_t n = require_streamable_modulus(m, "residue_product");
  if (n == 1) return 0;  // the lone residue is 0
  std::int64_t acc = 1;
  for (std::int64_t c = 1; c < n; ++c)
    if (gcd(c, n) == 1) acc = (acc * c) % n;
  return acc;
}

std::int64_t shifted_residue_product(std::int64_t x, std::int64_t m) {
  const std::int64_t n = require_streamable_modulus(m, "shifted_residue_product");
  const std::int64_t xc = canonical(x, n);
  if (n == 1) return 0;
  std::int64_t acc = 1;
  for (std::int64_t c = 1; c < n; ++c) {
    if (gcd(c, n) != 1) continue;
    std::int64_t f = xc + c;
    if (f >= n) f -= n;
    acc = (acc * f) % n;
  }
  return acc;
}

SplitDm common_divisor_split(std::int64_t x, std::int64_t m) {
  if (m == 0) throw std::domain_error("common_divisor_split: modulus must be nonzero");
  const Factorization f = factorize(m);
  const std::int64_t n = m < 0 ? -m : m;
  const std::int64_t ax = x < 0 ? -x : x;

  SplitDm out;
  out.d = 1;
  for (const auto& pp : f.factors) {
    if (x == 0 || ax % pp.prime == 0) {
      for (std::int64_t i = 0; i < pp.exponent; ++i) out.d *= pp.prime;
    }
  }
  out.m_prime = n / out.d;
  return out;
}

DiophSolution dioph_particular(std::int64_t d, std::int64_t m_prime, int eps) {
  if (d < 1 || m_prime < 1)
    throw std::domain_error("dioph_particular: d and m_prime must be positive");
  if (eps != 1 && eps != -1)
    throw std::domain_error("dioph_particular: eps must be +1 or -1");
  if (gcd(d, m_prime) != 1)
    throw std::domain_error("dioph_particular: d and m_prime must be coprime");

  // u*m_prime + v*d = 1  =>  (eps*u)*m_prime - (-eps*v)*d = eps.
  const Bezout bz = ext_gcd(m_prime, d);
  DiophSolution sol;
  sol.k2 = eps * bz.u;
  sol.k1 = -eps * bz.v;
  return sol;
}

std::int64_t predict_shifted_product(std::int64_t x, std::int64_t m) {
  if (m == 0) throw std::domain_error("predict_shifted_product: modulus must be nonzero");
  if (m > kMaxModulus || m < -kMaxModulus)
    throw std::out_of_range("predict_shifted_product: modulus exceeds 2^31-1 bound");
  const SplitDm split = common_divisor_split(x, m);
  const int eps = gauss_sign(m);
  return crt_pair(eps, split.d, 0, split.m_prime);
}

std::int64_t leibniz_product(std::int64_t m) {
  if (m == 1 || m == -1 || m == 0)
    throw std::domain_error("leibniz_product: |m| must be at least 2");
  const std::int64_t n = require_streamable_modulus(m, "leibniz_product");
  // Drop the largest residue n-1; it is always coprime to n.
  std::int64_t acc = 1 % n;
  for (std::int64_t c = 1; c < n - 1; ++c)
    if (gcd(c, n) == 1) acc = (acc * c) % n;
  return acc;
}

}  // namespace reslab
