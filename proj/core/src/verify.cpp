#include "reslab/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <exception>
#include <iterator>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>

#include "reslab/arith.hpp"
#include "reslab/chain.hpp"
#include "reslab/residues.hpp"

namespace reslab {

namespace {

constexpr std::array<std::pair<TheoremId, std::string_view>, 7> kTheoremNames{{
    {TheoremId::Gauss, "gauss"},
    {TheoremId::LTheorems, "l_theorems"},
    {TheoremId::EulerGen, "euler_gen"},
    {TheoremId::LagrangeExt, "lagrange_ext"},
    {TheoremId::MoserGen, "moser_gen"},
    {TheoremId::FermatWilson, "fermat_wilson"},
    {TheoremId::LeibnizGen, "leibniz_gen"},
}};

std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

void require_nonzero_bounded(std::int64_t m, const char* who) {
  if (m == 0) throw std::domain_error(std::string(who) + ": modulus must be nonzero");
  if (m > kMaxModulus || m < -kMaxModulus)
    throw std::out_of_range(std::string(who) + ": modulus exceeds 2^31-1 bound");
}

}  // namespace

std::string_view theorem_name(TheoremId id) {
  for (const auto& [tid, name] : kTheoremNames)
    if (tid == id) return name;
  return "unknown";
}

std::optional<TheoremId> theorem_from_name(std::string_view name) {
  for (const auto& [tid, tname] : kTheoremNames)
    if (tname == name) return tid;
  return std::nullopt;
}

std::string_view status_name(ReportStatus status) {
  return status == ReportStatus::Checked ? "checked" : "excluded_by_hypothesis";
}

std::string_view variant_name(ExponentVariant v) {
  return v == ExponentVariant::ChainPhi ? "chain_phi" : "full_phi";
}

std::string_view guard_name(GuardHandling g) {
  return g == GuardHandling::Respect ? "respect" : "include";
}

CongruenceReport verify_gauss(std::int64_t m) {
  require_nonzero_bounded(m, "verify_gauss");
  const int eps = gauss_sign(m);
  CongruenceReport rep;
  rep.theorem = TheoremId::Gauss;
  rep.m = m;
  rep.modulus = abs64(m);
  rep.lhs = residue_product(m);
  rep.rhs = canonical(eps, rep.modulus);
  rep.holds = rep.lhs == rep.rhs;
  rep.note = "eps=" + std::to_string(eps);
  return rep;
}

CongruenceReport verify_l_theorems(std::int64_t x, std::int64_t m) {
  require_nonzero_bounded(m, "verify_l_theorems");
  const SplitDm split = common_divisor_split(x, m);
  const int eps = gauss_sign(m);

  CongruenceReport rep;
  rep.theorem = TheoremId::LTheorems;
  rep.x = x;
  rep.m = m;
  rep.modulus = abs64(m);
  rep.lhs = shifted_residue_product(x, m);
  rep.rhs = predict_shifted_product(x, m);
  rep.holds = rep.lhs == rep.rhs;

  const bool zero_part = canonical(rep.lhs, split.m_prime) == 0;
  const bool sign_part =
      split.d == 1 || canonical(rep.lhs, split.d) == canonical(eps, split.d);
  rep.note = "d=" + std::to_string(split.d) +
             " m_prime=" + std::to_string(split.m_prime) +
             " eps=" + std::to_string(eps) +
             " zero_mod_m_prime=" + (zero_part ? "true" : "false") +
             " sign_mod_d=" + (sign_part ? "true" : "false");
  return rep;
}

CongruenceReport verify_lagrange_ext(std::int64_t x, std::int64_t m,
                                     GuardHandling guard) {
  require_nonzero_bounded(m, "verify_lagrange_ext");
  const std::int64_t n = abs64(m);
  if (n > kMaxResidueEnumeration)
    throw std::out_of_range("verify_lagrange_ext: modulus exceeds residue enumeration bound");

  CongruenceReport rep;
  rep.theorem = TheoremId::LagrangeExt;
  rep.x = x;
  rep.m = m;
  rep.modulus = n;

  const bool excluded = n == 4 || canonical(x, n) == 0;
  if (excluded) rep.status = ReportStatus::ExcludedByHypothesis;
  if (excluded && guard == GuardHandling::Respect) {
    rep.holds = true;  // vacuous; the point is outside the statement
    rep.note = "skipped";
    return rep;
  }

  const EulerChain chain = euler_chain(x, m);
  const std::int64_t exponent = phi(chain.terminal_modulus) + chain.step_count;
  rep.lhs = canonical(mod_pow(x, exponent, n) - mod_pow(x, chain.step_count, n), n);

  const std::int64_t xc = canonical(x, n);
  std::int64_t acc = 1 % n;
  for (std::int64_t j = 1; j < n; ++j) acc = (acc * ((xc + j) % n)) % n;
  rep.rhs = acc;

  rep.holds = rep.lhs == rep.rhs;
  rep.note = "s=" + std::to_string(chain.step_count) +
             " m_s=" + std::to_string(chain.terminal_modulus);
  return rep;
}

MoserReports verify_moser_gen(std::int64_t a, std::int64_t x, std::int64_t m,
                              ExponentVariant variant) {
  require_nonzero_bounded(m, "verify_moser_gen");
  const std::int64_t n = abs64(m);

  const std::int64_t product = shifted_residue_product(x, m);
  const EulerChain chain = euler_chain(a, m);
  const std::int64_t base_phi =
      variant == ExponentVariant::ChainPhi ? phi(chain.terminal_modulus) : phi(n);
  const std::int64_t exponent = base_phi + chain.step_count;

  const std::int64_t high = (product * mod_pow(a, exponent, n)) % n;
  const std::int64_t low = (product * mod_pow(a, chain.step_count, n)) % n;

  CongruenceReport rep;
  rep.theorem = TheoremId::MoserGen;
  rep.x = x;
  rep.a = a;
  rep.m = m;
  rep.modulus = n;
  rep.holds = high == low;
  rep.note = "direction=moser variant=" + std::string(variant_name(variant)) +
             " s=" + std::to_string(chain.step_count) +
             " m_s=" + std::to_string(chain.terminal_modulus) +
             " product=" + std::to_string(product);

  MoserReports out;
  out.moser = rep;
  out.moser.lhs = high;
  out.moser.rhs = low;

  out.sierpinski = rep;
  out.sierpinski.lhs = low;
  out.sierpinski.rhs = high;
  out.sierpinski.note = "direction=sierpinski" + rep.note.substr(sizeof("direction=moser") - 1);
  return out;
}

CongruenceReport verify_fermat_wilson(std::int64_t a, std::int64_t m,
                                      GuardHandling guard) {
  if (m < 1) throw std::domain_error("verify_fermat_wilson: modulus must be positive");
  if (m > kMaxResidueEnumeration)
    throw std::out_of_range("verify_fermat_wilson: modulus exceeds factorial evaluation bound");

  CongruenceReport rep;
  rep.theorem = TheoremId::FermatWilson;
  rep.a = a;
  rep.m = m;
  rep.modulus = m;

  const bool excluded = m == 4;
  if (excluded) rep.status = ReportStatus::ExcludedByHypothesis;
  if (excluded && guard == GuardHandling::Respect) {
    rep.holds = true;
    rep.note = "skipped";
    return rep;
  }

  std::int64_t factorial = 1 % m;
  for (std::int64_t j = 2; j < m; ++j) factorial = (factorial * j) % m;
  const std::int64_t fermat = canonical(mod_pow(a, m, m) - canonical(a, m), m);
  rep.lhs = (fermat * factorial) % m;
  rep.rhs = 0;
  rep.holds = rep.lhs == rep.rhs;
  rep.note = "fermat_part=" + std::to_string(fermat) +
             " wilson_part=" + std::to_string(factorial);
  return rep;
}

CongruenceReport verify_leibniz_gen(std::int64_t m) {
  CongruenceReport rep;
  rep.theorem = TheoremId::LeibnizGen;
  rep.m = m;
  rep.lhs = leibniz_product(m);  // validates m
  rep.modulus = abs64(m);
  rep.rhs = canonical(-gauss_sign(m), rep.modulus);
  rep.holds = rep.lhs == rep.rhs;
  rep.note = "eps=" + std::to_string(gauss_sign(m));
  return rep;
}

namespace {

struct PerModulus {
  std::int64_t total = 0;
  std::int64_t excluded = 0;
  std::int64_t excluded_failures = 0;
  std::vector<CongruenceReport> violations;
  std::vector<CongruenceReport> excluded_fail_reports;
};

Range x_window(const ScanRequest& req, std::int64_t m) {
  if (req.x_range) return *req.x_range;
  const std::int64_t n = abs64(m);
  switch (req.theorem) {
    case TheoremId::LTheorems:
      return {0, n - 1};
    case TheoremId::EulerGen:
      return {0, 2 * n};
    case TheoremId::LagrangeExt:
      return {1, 2 * n};
    case TheoremId::MoserGen:
      return {0, 0};
    default:
      return {0, 0};
  }
}

PerModulus scan_modulus(const ScanRequest& req, std::int64_t m) {
  PerModulus out;

  auto record = [&out](const CongruenceReport& rep) {
    if (rep.status == ReportStatus::ExcludedByHypothesis) {
      ++out.excluded;
      if (!rep.holds) {
        ++out.excluded_failures;
        out.excluded_fail_reports.push_back(rep);
      }
    } else {
      ++out.total;
      if (!rep.holds) out.violations.push_back(rep);
    }
  };

  switch (req.theorem) {
    case TheoremId::Gauss:
      record(verify_gauss(m));
      break;
    case TheoremId::LeibnizGen:
      record(verify_leibniz_gen(m));
      break;
    case TheoremId::LTheorems: {
      const Range xs = x_window(req, m);
      for (std::int64_t x = xs.lo; x <= xs.hi; ++x) record(verify_l_theorems(x, m));
      break;
    }
    case TheoremId::EulerGen: {
      const Range xs = x_window(req, m);
      for (std::int64_t x = xs.lo; x <= xs.hi; ++x) record(verify_euler_gen(x, m));
      break;
    }
    case TheoremId::LagrangeExt: {
      const Range xs = x_window(req, m);
      for (std::int64_t x = xs.lo; x <= xs.hi; ++x) {
        const bool excluded = abs64(m) == 4 || canonical(x, m) == 0;
        if (excluded && req.guard == GuardHandling::Respect) {
          ++out.excluded;  // skipped, not evaluated
          continue;
        }
        record(verify_lagrange_ext(x, m, req.guard));
      }
      break;
    }
    case TheoremId::MoserGen: {
      const Range xs = x_window(req, m);
      const Range as = *req.a_range;
      for (std::int64_t x = xs.lo; x <= xs.hi; ++x) {
        for (std::int64_t a = as.lo; a <= as.hi; ++a) {
          const MoserReports pair = verify_moser_gen(a, x, m, req.variant);
          ++out.total;
          if (!pair.moser.holds) out.violations.push_back(pair.moser);
          if (!pair.sierpinski.holds) out.violations.push_back(pair.sierpinski);
        }
      }
      break;
    }
    case TheoremId::FermatWilson: {
      const Range as = *req.a_range;
      for (std::int64_t a = as.lo; a <= as.hi; ++a) {
        if (m == 4 && req.guard == GuardHandling::Respect) {
          ++out.excluded;
          continue;
        }
        record(verify_fermat_wilson(a, m, req.guard));
      }
      break;
    }
  }
  return out;
}

void validate_range(const Range& r, const char* name) {
  if (r.lo > r.hi)
    throw std::invalid_argument(std::string("scan: empty ") + name + " range");
}

std::string render_range(const Range& r) {
  return std::to_string(r.lo) + ".." + std::to_string(r.hi);
}

void validate_request(const ScanRequest& req) {
  validate_range(req.m_range, "m");
  if (req.x_range) validate_range(*req.x_range, "x");
  if (req.a_range) validate_range(*req.a_range, "a");

  const bool uses_x = req.theorem == TheoremId::LTheorems ||
                      req.theorem == TheoremId::EulerGen ||
                      req.theorem == TheoremId::LagrangeExt ||
                      req.theorem == TheoremId::MoserGen;
  const bool uses_a =
      req.theorem == TheoremId::MoserGen || req.theorem == TheoremId::FermatWilson;
  if (req.x_range && !uses_x)
    throw std::invalid_argument("scan: theorem takes no x range");
  if (req.a_range && !uses_a)
    throw std::invalid_argument("scan: theorem takes no a range");
  if (uses_a && !req.a_range)
    throw std::invalid_argument("scan: theorem requires an a range");

  if (req.m_range.lo <= 0 && req.m_range.hi >= 0)
    throw std::invalid_argument("scan: m range must not contain 0");
  if (req.theorem == TheoremId::FermatWilson && req.m_range.lo < 1)
    throw std::invalid_argument("scan: fermat_wilson needs positive moduli");
  if (req.theorem == TheoremId::LeibnizGen &&
      (abs64(req.m_range.lo) < 2 || abs64(req.m_range.hi) < 2))
    throw std::invalid_argument("scan: leibniz_gen needs |m| >= 2");

  const std::int64_t max_abs =
      std::max(abs64(req.m_range.lo), abs64(req.m_range.hi));
  if (max_abs > kMaxResidueEnumeration)
    throw std::invalid_argument("scan: m range exceeds residue enumeration bound");
}

std::string render_ranges(const ScanRequest& req) {
  std::string out = "m=" + render_range(req.m_range);
  if (req.x_range) {
    out += " x=" + render_range(*req.x_range);
  } else {
    switch (req.theorem) {
      case TheoremId::LTheorems:
        out += " x=0..|m|-1";
        break;
      case TheoremId::EulerGen:
        out += " x=0..2|m|";
        break;
      case TheoremId::LagrangeExt:
        out += " x=1..2|m|";
        break;
      case TheoremId::MoserGen:
        out += " x=0..0";
        break;
      default:
        break;
    }
  }
  if (req.a_range) out += " a=" + render_range(*req.a_range);
  return out;
}

}  // namespace

ScanResult scan(const ScanRequest& request) {
  validate_request(request);
  const auto start = std::chrono::steady_clock::now();

  const std::int64_t lo = request.m_range.lo;
  const std::int64_t count = request.m_range.hi - lo + 1;

  int workers = request.workers;
  if (workers <= 0) {
    const unsigned hc = std::thread::hardware_concurrency();
    workers = hc == 0 ? 1 : static_cast<int>(hc);
  }
  workers = std::min(workers, 64);
  if (static_cast<std::int64_t>(workers) > count)
    workers = static_cast<int>(count);

  std::vector<PerModulus> slots(static_cast<std::size_t>(count));
  if (workers <= 1) {
    for (std::int64_t i = 0; i < count; ++i)
      slots[static_cast<std::size_t>(i)] = scan_modulus(request, lo + i);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::int64_t i = w; i < count; i += workers)
            slots[static_cast<std::size_t>(i)] = scan_modulus(request, lo + i);
        } catch (...) {
          errors[static_cast<std::size_t>(w)] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (const auto& err : errors)
      if (err) std::rethrow_exception(err);
  }

  ScanResult result;
  result.theorem = request.theorem;
  result.ranges = render_ranges(request);
  for (auto& slot : slots) {
    result.total_cases += slot.total;
    result.excluded_cases += slot.excluded;
    result.excluded_failures += slot.excluded_failures;
    result.violations.insert(result.violations.end(),
                             std::make_move_iterator(slot.violations.begin()),
                             std::make_move_iterator(slot.violations.end()));
    result.excluded_fail_reports.insert(
        result.excluded_fail_reports.end(),
        std::make_move_iterator(slot.excluded_fail_reports.begin()),
        std::make_move_iterator(slot.excluded_fail_reports.end()));
  }
  result.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace reslab
