#include "reslab/chain.hpp"

#include <limits>
#include <stdexcept>

#include "reslab/arith.hpp"

namespace reslab {

EulerChain euler_chain(std::int64_t x, std::int64_t m) {
  if (m == 0) throw std::domain_error("euler_chain: modulus must be nonzero");
  if (m == std::numeric_limits<std::int64_t>::min() ||
      x == std::numeric_limits<std::int64_t>::min())
    throw std::out_of_range("euler_chain: input magnitude not representable");

  EulerChain chain;
  chain.x = x;
  chain.m = m;
  const std::int64_t n = m < 0 ? -m : m;

  std::int64_t d = gcd(x, n);
  if (d == 1) {
    chain.step_count = 0;
    chain.terminal_modulus = n;
    return chain;
  }
  std::int64_t mod = n;
  while (true) {
    mod /= d;
    chain.steps.push_back({d, mod});
    if (d == 1) break;
    d = gcd(d, mod);
  }
  chain.step_count = static_cast<std::int64_t>(chain.steps.size()) - 1;
  chain.terminal_modulus = chain.steps.back().modulus;
  return chain;
}

CongruenceReport verify_euler_gen(std::int64_t x, std::int64_t m) {
  if (m == 0) throw std::domain_error("verify_euler_gen: modulus must be nonzero");
  if (m > kMaxModulus || m < -kMaxModulus)
    throw std::out_of_range("verify_euler_gen: modulus exceeds 2^31-1 bound");

  const EulerChain chain = euler_chain(x, m);
  const std::int64_t exponent = phi(chain.terminal_modulus) + chain.step_count;

  CongruenceReport rep;
  rep.theorem = TheoremId::EulerGen;
  rep.x = x;
  rep.m = m;
  rep.modulus = m < 0 ? -m : m;
  rep.lhs = mod_pow(x, exponent, rep.modulus);
  rep.rhs = mod_pow(x, chain.step_count, rep.modulus);
  rep.holds = rep.lhs == rep.rhs;
  rep.note = "s=" + std::to_string(chain.step_count) +
             " m_s=" + std::to_string(chain.terminal_modulus);
  return rep;
}

}  // namespace reslab
