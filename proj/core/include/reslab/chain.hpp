#pragma once

#include <cstdint>
#include <vector>

#include "reslab/report.hpp"

// Iterated-gcd decomposition of (x, m): starting from d_0 = gcd(|x|, |m|),
// m_0 = |m| / d_0, keep taking d_i = gcd(d_{i-1}, m_{i-1}) and
// m_i = m_{i-1} / d_i until d = 1. The terminal pair (m_s, s) turns Euler's
// theorem into a congruence valid for every x, coprime or not.

namespace reslab {

struct ChainStep {
  std::int64_t divisor = 1;  // d_i
  std::int64_t modulus = 1;  // m_i
  bool operator==(const ChainStep&) const = default;
};

struct EulerChain {
  std::int64_t x = 0;
  std::int64_t m = 1;
  // Steps through the first divisor equal to 1. Empty when gcd(|x|, |m|) = 1.
  std::vector<ChainStep> steps;
  std::int64_t step_count = 0;        // s: index of the terminating step
  std::int64_t terminal_modulus = 1;  // m_s
};

/// Runs the decomposition. Rejects m = 0.
EulerChain euler_chain(std::int64_t x, std::int64_t m);

/// Checks x^(phi(m_s)+s) = x^s (mod |m|) with (m_s, s) from euler_chain(x, m).
/// Coprime x reduces to Euler's theorem (s = 0, m_s = |m|).
CongruenceReport verify_euler_gen(std::int64_t x, std::int64_t m);

}  // namespace reslab
