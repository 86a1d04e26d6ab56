#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace reslab {

// Congruence families the verifiers cover. The names below are also the
// stable spellings used on the command line and in reports.
enum class TheoremId {
  Gauss,         // product of reduced residues vs the +-1 sign
  LTheorems,     // shifted residue product vs its CRT prediction
  EulerGen,      // x^(phi(m_s)+s) = x^s (mod m)
  LagrangeExt,   // x^(phi(m_s)+s) - x^s = prod_{j=1..|m|-1}(x+j) (mod m)
  MoserGen,      // P*a^e = P*a^s (mod m), both directions
  FermatWilson,  // (a^m - a)(m-1)! = 0 (mod m)
  LeibnizGen,    // residue product without the largest residue
};

std::string_view theorem_name(TheoremId id);
std::optional<TheoremId> theorem_from_name(std::string_view name);

enum class ReportStatus {
  Checked,
  ExcludedByHypothesis,  // point outside the statement's hypothesis
};

std::string_view status_name(ReportStatus status);

// One verified congruence instance: the parameters that produced it, both
// sides reduced to canonical residues, and whether they agree.
struct CongruenceReport {
  TheoremId theorem = TheoremId::Gauss;
  std::optional<std::int64_t> x;
  std::optional<std::int64_t> a;
  std::int64_t m = 0;
  std::int64_t modulus = 1;  // |m|
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool holds = false;
  ReportStatus status = ReportStatus::Checked;
  std::string note;  // short key=value extras (split, chain tail, variant)
};

}  // namespace reslab
