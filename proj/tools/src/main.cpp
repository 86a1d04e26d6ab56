#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "record.hpp"
#include "reslab/arith.hpp"
#include "reslab/chain.hpp"
#include "reslab/oracle.hpp"
#include "reslab/residues.hpp"
#include "reslab/verify.hpp"

// Exit codes: 0 success, 1 verification violations found, 2 usage or bounds
// errors. Stdout carries only deterministic records and the summary line;
// timing goes to stderr.

namespace {

using reslab::GuardHandling;
using reslab::Range;
using reslab::TheoremId;
using reslab::cli::Format;
using reslab::cli::OutputRecord;
using reslab::cli::RecordWriter;

std::int64_t parse_i64(const std::string& text) {
  std::size_t pos = 0;
  std::int64_t value = 0;
  try {
    value = std::stoll(text, &pos, 10);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a base-10 integer: '" + text + "'");
  }
  if (pos != text.size())
    throw std::invalid_argument("not a base-10 integer: '" + text + "'");
  return value;
}

// "lo..hi" (inclusive) or a single value "n".
Range parse_range(const std::string& text) {
  const std::size_t sep = text.size() > 1 ? text.find("..", 1) : std::string::npos;
  if (sep == std::string::npos) {
    const std::int64_t v = parse_i64(text);
    return {v, v};
  }
  return {parse_i64(text.substr(0, sep)), parse_i64(text.substr(sep + 2))};
}

std::optional<std::int64_t> parse_opt_i64(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return parse_i64(text);
}

TheoremId resolve_theorem(const std::string& positional, const std::string& flag) {
  if (positional.empty() && flag.empty())
    throw std::invalid_argument("missing theorem name");
  if (!positional.empty() && !flag.empty() && positional != flag)
    throw std::invalid_argument("conflicting theorem names given");
  const std::string& name = positional.empty() ? flag : positional;
  const auto id = reslab::theorem_from_name(name);
  if (!id)
    throw std::invalid_argument(
        "unknown theorem '" + name +
        "' (expected gauss, l_theorems, euler_gen, lagrange_ext, moser_gen, "
        "fermat_wilson or leibniz_gen)");
  return *id;
}

reslab::ExponentVariant resolve_variant(const std::string& name) {
  if (name == "chain-phi" || name == "chain_phi")
    return reslab::ExponentVariant::ChainPhi;
  if (name == "full-phi" || name == "full_phi")
    return reslab::ExponentVariant::FullPhi;
  throw std::invalid_argument("unknown variant '" + name + "'");
}

GuardHandling resolve_guard(const std::string& name) {
  if (name == "respect") return GuardHandling::Respect;
  if (name == "include") return GuardHandling::Include;
  throw std::invalid_argument("unknown guard handling '" + name + "'");
}

std::int64_t require_param(const std::optional<std::int64_t>& value,
                           const char* flag, TheoremId theorem) {
  if (!value)
    throw std::invalid_argument(std::string(reslab::theorem_name(theorem)) +
                                " requires " + flag);
  return *value;
}

struct CommonState {
  Format format = Format::Text;
  std::ofstream out_file;
  bool to_file = false;
};

int run_verify(TheoremId theorem, const std::optional<std::int64_t>& x,
               const std::optional<std::int64_t>& m,
               const std::optional<std::int64_t>& a,
               reslab::ExponentVariant variant, GuardHandling guard,
               RecordWriter& writer) {
  std::vector<reslab::CongruenceReport> reports;
  switch (theorem) {
    case TheoremId::Gauss:
      reports.push_back(reslab::verify_gauss(require_param(m, "--m", theorem)));
      break;
    case TheoremId::LTheorems:
      reports.push_back(reslab::verify_l_theorems(require_param(x, "--x", theorem),
                                                  require_param(m, "--m", theorem)));
      break;
    case TheoremId::EulerGen:
      reports.push_back(reslab::verify_euler_gen(require_param(x, "--x", theorem),
                                                 require_param(m, "--m", theorem)));
      break;
    case TheoremId::LagrangeExt:
      reports.push_back(reslab::verify_lagrange_ext(
          require_param(x, "--x", theorem), require_param(m, "--m", theorem), guard));
      break;
    case TheoremId::MoserGen: {
      const reslab::MoserReports pair = reslab::verify_moser_gen(
          require_param(a, "--a", theorem), x.value_or(0),
          require_param(m, "--m", theorem), variant);
      reports.push_back(pair.moser);
      reports.push_back(pair.sierpinski);
      break;
    }
    case TheoremId::FermatWilson:
      reports.push_back(reslab::verify_fermat_wilson(
          require_param(a, "--a", theorem), require_param(m, "--m", theorem), guard));
      break;
    case TheoremId::LeibnizGen:
      reports.push_back(reslab::verify_leibniz_gen(require_param(m, "--m", theorem)));
      break;
  }

  int code = 0;
  for (const auto& rep : reports) {
    writer.write(reslab::cli::report_record(rep));
    if (!rep.holds) code = 1;
  }
  return code;
}

int run_scan(const reslab::ScanRequest& request, RecordWriter& writer) {
  const reslab::ScanResult result = reslab::scan(request);
  for (const auto& rep : result.violations)
    writer.write(reslab::cli::report_record(rep));
  for (const auto& rep : result.excluded_fail_reports)
    writer.write(reslab::cli::report_record(rep));

  std::cout << reslab::cli::render_text(
                   reslab::cli::scan_summary_record(request, result))
            << '\n';
  std::cerr << "# elapsed_seconds=" << result.elapsed_seconds << '\n';
  return result.violations.empty() && result.excluded_failures == 0 ? 0 : 1;
}

int run_selfcheck(RecordWriter& writer) {
  std::int64_t total_failures = 0;

  // Lemma 1: shifted residues of p^alpha stay a reduced system.
  {
    std::int64_t cases = 0, failures = 0;
    for (const std::int64_t p : {2, 3, 5, 7, 11, 13})
      for (std::int64_t alpha = 1; alpha <= 3; ++alpha)
        for (std::int64_t beta = 1; beta <= 3; ++beta)
          for (std::int64_t k = -5; k <= 5; ++k) {
            ++cases;
            if (!reslab::oracle::lemma1_shift_check(p, alpha, beta, k).passed)
              ++failures;
          }
    total_failures += failures;
    writer.write(reslab::cli::suite_record("lemma1_shift_invariance", cases, failures));
  }

  // Lemma 2: residues of m partition into copies of the p^alpha system.
  {
    std::int64_t cases = 0, failures = 0;
    for (std::int64_t m = 2; m <= 500; ++m)
      for (const auto& pp : reslab::factorize(m).factors) {
        ++cases;
        if (!reslab::oracle::lemma2_partition_check(m, pp.prime).passed) ++failures;
      }
    total_failures += failures;
    writer.write(
        reslab::cli::suite_record("lemma2_prime_power_partition", cases, failures));
  }

  // Lemma 3: b plus some reduced residue of q is a multiple of q.
  {
    std::int64_t cases = 0, failures = 0;
    for (std::int64_t q = 2; q <= 300; ++q)
      for (std::int64_t b = 1; b <= q; ++b) {
        if (reslab::gcd(b, q) != 1) continue;
        ++cases;
        if (!reslab::oracle::lemma3_zero_rep_check(b, q).passed) ++failures;
      }
    total_failures += failures;
    writer.write(
        reslab::cli::suite_record("lemma3_zero_representative", cases, failures));
  }

  // Brute-force recomputation of the shifted product agrees with the library.
  {
    std::int64_t cases = 0, failures = 0;
    for (std::int64_t m = 1; m <= 120; ++m)
      for (std::int64_t x = 0; x < m; ++x) {
        ++cases;
        if (reslab::oracle::brute_shifted_product(x, m) !=
            reslab::shifted_residue_product(x, m))
          ++failures;
      }
    total_failures += failures;
    writer.write(
        reslab::cli::suite_record("shifted_product_equivalence", cases, failures));
  }

  OutputRecord summary;
  summary.add("record", "selfcheck_summary");
  summary.add("suites", static_cast<std::int64_t>(4));
  summary.add("failures", total_failures);
  summary.add("passed", total_failures == 0);
  std::cout << reslab::cli::render_text(summary) << '\n';
  return total_failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reslab: products over reduced residue systems and their congruences"};
  app.require_subcommand(1);

  std::string format_name = "text";
  std::string out_path;
  app.add_option("--format", format_name, "output format: text, csv or jsonl")
      ->check(CLI::IsMember({"text", "csv", "jsonl"}));
  app.add_option("--out", out_path,
                 "write records to this file; the summary stays on stdout");

  // Values are parsed as strings so negative numbers and lo..hi ranges work
  // uniformly; conversion happens after CLI11.
  std::string m_pos, m_flag, x_flag, a_flag;
  std::string theorem_pos, theorem_flag;
  std::string variant_name = "chain-phi";
  std::string guard_name = "respect";
  int workers = 0;

  CLI::App* classify = app.add_subcommand("classify", "membership of m in the sign family");
  classify->add_option("M", m_pos, "modulus (use --m=<v> for negatives)");
  classify->add_option("--m", m_flag, "modulus");

  CLI::App* residues = app.add_subcommand("residues", "reduced residue system of m");
  residues->add_option("M", m_pos, "modulus (use --m=<v> for negatives)");
  residues->add_option("--m", m_flag, "modulus");

  CLI::App* lcmd = app.add_subcommand("L", "shifted residue product, its prediction and split");
  lcmd->add_option("--x", x_flag, "shift")->required();
  lcmd->add_option("--m", m_flag, "modulus")->required();

  CLI::App* predict = app.add_subcommand("predict", "predicted shifted product from the split");
  predict->add_option("--x", x_flag, "shift")->required();
  predict->add_option("--m", m_flag, "modulus")->required();

  CLI::App* chain = app.add_subcommand("chain", "iterated-gcd chain of (x, m)");
  chain->add_option("--x", x_flag, "base")->required();
  chain->add_option("--m", m_flag, "modulus")->required();

  CLI::App* verify = app.add_subcommand("verify", "check one congruence instance");
  verify->add_option("THEOREM", theorem_pos, "theorem name");
  verify->add_option("--theorem", theorem_flag, "theorem name");
  verify->add_option("--x", x_flag, "shift / base");
  verify->add_option("--m", m_flag, "modulus");
  verify->add_option("--a", a_flag, "base of the exponentials");
  verify->add_option("--variant", variant_name, "moser exponent: chain-phi or full-phi");
  verify->add_option("--guard", guard_name, "hypothesis guard: respect or include");

  CLI::App* scan = app.add_subcommand("scan", "sweep a parameter rectangle");
  scan->add_option("THEOREM", theorem_pos, "theorem name");
  scan->add_option("--theorem", theorem_flag, "theorem name");
  scan->add_option("--m,--m-range", m_flag, "modulus range lo..hi (inclusive)");
  scan->add_option("--x,--x-range", x_flag, "x range lo..hi; defaults per theorem");
  scan->add_option("--a,--a-range", a_flag, "a range lo..hi");
  scan->add_option("--variant", variant_name, "moser exponent: chain-phi or full-phi");
  scan->add_option("--guard", guard_name, "hypothesis guard: respect or include");
  scan->add_option("--workers", workers, "worker threads (0 = all processors)")
      ->check(CLI::NonNegativeNumber);

  CLI::App* selfcheck =
      app.add_subcommand("selfcheck", "run the brute-force oracle suites");

  for (CLI::App* sub : {classify, residues, lcmd, predict, chain, verify, scan, selfcheck})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    CommonState state;
    state.format = *reslab::cli::format_from_name(format_name);
    if (!out_path.empty()) {
      state.out_file.open(out_path, std::ios::out | std::ios::trunc);
      if (!state.out_file)
        throw std::invalid_argument("cannot open output file '" + out_path + "'");
      state.to_file = true;
    }
    RecordWriter writer(state.to_file ? static_cast<std::ostream&>(state.out_file)
                                      : std::cout,
                        state.format);

    auto positional_m = [&]() -> std::int64_t {
      if (m_pos.empty() && m_flag.empty())
        throw std::invalid_argument("missing modulus argument");
      if (!m_pos.empty() && !m_flag.empty())
        throw std::invalid_argument("modulus given twice");
      return parse_i64(m_pos.empty() ? m_flag : m_pos);
    };

    if (classify->parsed()) {
      writer.write(reslab::cli::classify_record(positional_m()));
      return 0;
    }
    if (residues->parsed()) {
      writer.write(reslab::cli::residues_record(positional_m()));
      return 0;
    }
    if (lcmd->parsed()) {
      writer.write(reslab::cli::shifted_product_record(parse_i64(x_flag), parse_i64(m_flag)));
      return 0;
    }
    if (predict->parsed()) {
      writer.write(reslab::cli::predict_record(parse_i64(x_flag), parse_i64(m_flag)));
      return 0;
    }
    if (chain->parsed()) {
      writer.write(reslab::cli::chain_record(parse_i64(x_flag), parse_i64(m_flag)));
      return 0;
    }
    if (verify->parsed()) {
      const TheoremId theorem = resolve_theorem(theorem_pos, theorem_flag);
      return run_verify(theorem, parse_opt_i64(x_flag), parse_opt_i64(m_flag),
                        parse_opt_i64(a_flag), resolve_variant(variant_name),
                        resolve_guard(guard_name), writer);
    }
    if (scan->parsed()) {
      reslab::ScanRequest request;
      request.theorem = resolve_theorem(theorem_pos, theorem_flag);
      if (m_flag.empty()) throw std::invalid_argument("scan requires --m lo..hi");
      request.m_range = parse_range(m_flag);
      if (!x_flag.empty()) request.x_range = parse_range(x_flag);
      if (!a_flag.empty()) request.a_range = parse_range(a_flag);
      request.variant = resolve_variant(variant_name);
      request.guard = resolve_guard(guard_name);
      request.workers = workers;
      return run_scan(request, writer);
    }
    if (selfcheck->parsed()) {
      return run_selfcheck(writer);
    }
    throw std::invalid_argument("no subcommand given");
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
