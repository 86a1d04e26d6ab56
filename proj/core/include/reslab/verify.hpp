#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "reslab/report.hpp"

// One verifier per congruence family plus a range scanner. Verifiers are
// pure; scan may fan out over worker threads but its result is identical for
// every worker count and schedule.

namespace reslab {

// Exponent used by the Moser/Sierpinski checks: the chain form
// phi(m_s) + s, or the full-totient form phi(m) + s.
enum class ExponentVariant { ChainPhi, FullPhi };

// What to do with points outside a statement's hypothesis: skip them, or
// evaluate them anyway (they stay tagged ExcludedByHypothesis either way).
enum class GuardHandling { Respect, Include };

std::string_view variant_name(ExponentVariant v);
std::string_view guard_name(GuardHandling g);

/// Product of reduced residues vs gauss_sign(m), mod |m|.
CongruenceReport verify_gauss(std::int64_t m);

/// shifted_residue_product(x, m) vs predict_shifted_product(x, m); the note
/// records the (d, m_prime) split and both sub-congruences.
CongruenceReport verify_l_theorems(std::int64_t x, std::int64_t m);

/// x^(phi(m_s)+s) - x^s vs prod_{j=1..|m|-1}(x + j), mod |m|.
/// Hypothesis: |m| != 4 and x not = 0 (mod |m|).
CongruenceReport verify_lagrange_ext(std::int64_t x, std::int64_t m,
                                     GuardHandling guard = GuardHandling::Respect);

// The two directions of the merged Fermat/Wilson congruence
// P*a^e = P*a^s (mod |m|) with P = shifted_residue_product(x, m) and
// (m_s, s) from euler_chain(a, m).
struct MoserReports {
  CongruenceReport moser;       // lhs = P*a^e, rhs = P*a^s
  CongruenceReport sierpinski;  // the reverse reading
};

MoserReports verify_moser_gen(std::int64_t a, std::int64_t x, std::int64_t m,
                              ExponentVariant variant = ExponentVariant::ChainPhi);

/// (a^m - a) * (m-1)! = 0 (mod m) for m >= 1. Hypothesis excludes m = 4.
CongruenceReport verify_fermat_wilson(std::int64_t a, std::int64_t m,
                                      GuardHandling guard = GuardHandling::Respect);

/// leibniz_product(m) vs -gauss_sign(m), mod |m|. Requires |m| >= 2.
CongruenceReport verify_leibniz_gen(std::int64_t m);

// Inclusive integer range.
struct Range {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  bool operator==(const Range&) const = default;
};

struct ScanRequest {
  TheoremId theorem = TheoremId::Gauss;
  Range m_range;
  // When absent, x sweeps the theorem's natural window per modulus:
  // [0, |m|-1] for l_theorems, [0, 2|m|] for euler_gen, [1, 2|m|] for
  // lagrange_ext, {0} for moser_gen.
  std::optional<Range> x_range;
  std::optional<Range> a_range;  // required by moser_gen and fermat_wilson
  ExponentVariant variant = ExponentVariant::ChainPhi;
  GuardHandling guard = GuardHandling::Respect;
  int workers = 0;  // 0 = hardware concurrency
};

struct ScanResult {
  TheoremId theorem = TheoremId::Gauss;
  std::string ranges;                 // rendered parameter rectangle
  std::int64_t total_cases = 0;       // in-hypothesis points evaluated
  std::int64_t excluded_cases = 0;    // points outside the hypothesis
  std::int64_t excluded_failures = 0; // failures among evaluated excluded points
  // In-hypothesis failures, ordered by (m, x, a); for moser_gen the moser
  // direction precedes the sierpinski one at equal parameters.
  std::vector<CongruenceReport> violations;
  // Failing excluded points, same order; populated under GuardHandling::Include.
  std::vector<CongruenceReport> excluded_fail_reports;
  double elapsed_seconds = 0.0;
};

/// Sweeps the rectangle and collects failures. Deterministic: the result is
/// byte-for-byte independent of the worker count.
ScanResult scan(const ScanRequest& request);

}  // namespace reslab
