#include "record.hpp"

#include <json.hpp>

#include "reslab/arith.hpp"
#include "reslab/chain.hpp"
#include "reslab/residues.hpp"

namespace reslab::cli {

namespace {

std::string_view form_name(ClassAForm form) {
  switch (form) {
    case ClassAForm::Zero:
      return "Zero";
    case ClassAForm::PowerOfTwoSmall:
      return "PowerOfTwoSmall";
    case ClassAForm::OddPrimePower:
      return "OddPrimePower";
    case ClassAForm::TwiceOddPrimePower:
      return "TwiceOddPrimePower";
    case ClassAForm::NotInA:
      return "NotInA";
  }
  return "NotInA";
}

std::string csv_cell(const std::string& raw) {
  if (raw.find_first_of(",\"\n") == std::string::npos) return raw;
  std::string quoted = "\"";
  for (const char c : raw) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string render_range_value(const Range& r) {
  return std::to_string(r.lo) + ".." + std::to_string(r.hi);
}

}  // namespace

std::optional<Format> format_from_name(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "csv") return Format::Csv;
  if (name == "jsonl") return Format::Jsonl;
  return std::nullopt;
}

std::string value_text(const FieldValue& value) {
  if (const auto* i = std::get_if<std::int64_t>(&value)) return std::to_string(*i);
  if (const auto* b = std::get_if<bool>(&value)) return *b ? "true" : "false";
  return std::get<std::string>(value);
}

std::string render_text(const OutputRecord& rec) {
  std::string line;
  for (const auto& [key, value] : rec.fields) {
    if (!line.empty()) line += ' ';
    line += key;
    line += '=';
    line += value_text(value);
  }
  return line;
}

void RecordWriter::write(const OutputRecord& rec) {
  switch (format_) {
    case Format::Text:
      *out_ << render_text(rec) << '\n';
      break;
    case Format::Csv: {
      std::vector<std::string> keys;
      keys.reserve(rec.fields.size());
      for (const auto& [key, value] : rec.fields) keys.push_back(key);
      if (keys != csv_header_) {
        csv_header_ = keys;
        std::string header;
        for (const auto& key : keys) {
          if (!header.empty()) header += ',';
          header += csv_cell(key);
        }
        *out_ << header << '\n';
      }
      std::string row;
      for (const auto& [key, value] : rec.fields) {
        if (!row.empty()) row += ',';
        row += csv_cell(value_text(value));
      }
      *out_ << row << '\n';
      break;
    }
    case Format::Jsonl: {
      nlohmann::ordered_json obj;
      for (const auto& [key, value] : rec.fields) {
        if (const auto* i = std::get_if<std::int64_t>(&value))
          obj[key] = *i;
        else if (const auto* b = std::get_if<bool>(&value))
          obj[key] = *b;
        else
          obj[key] = std::get<std::string>(value);
      }
      *out_ << obj.dump() << '\n';
      break;
    }
  }
  out_->flush();
}

OutputRecord classify_record(std::int64_t m) {
  const ClassAVerdict verdict = classify_a(m);
  OutputRecord rec;
  rec.add("record", "classify");
  rec.add("m", m);
  rec.add("member", verdict.member);
  rec.add("form", form_name(verdict.form));
  if (verdict.form == ClassAForm::OddPrimePower ||
      verdict.form == ClassAForm::TwiceOddPrimePower) {
    rec.add("p", verdict.prime);
    rec.add("beta", verdict.exponent);
  } else if (verdict.form == ClassAForm::PowerOfTwoSmall) {
    rec.add("alpha", verdict.exponent);
  }
  if (m != 0) rec.add("sign", static_cast<std::int64_t>(gauss_sign(m)));
  return rec;
}

OutputRecord residues_record(std::int64_t m) {
  const ResidueSystem rs = reduced_residues(m);
  OutputRecord rec;
  rec.add("record", "residues");
  rec.add("m", m);
  rec.add("modulus", rs.modulus);
  rec.add("phi", rs.phi());
  std::string list;
  for (const std::int64_t r : rs.residues) {
    if (!list.empty()) list += ';';
    list += std::to_string(r);
  }
  rec.add("residues", list);
  return rec;
}

OutputRecord shifted_product_record(std::int64_t x, std::int64_t m) {
  const std::int64_t value = shifted_residue_product(x, m);
  const std::int64_t predicted = predict_shifted_product(x, m);
  const SplitDm split = common_divisor_split(x, m);
  const int eps = gauss_sign(m);
  const DiophSolution sol = dioph_particular(split.d, split.m_prime, eps);

  OutputRecord rec;
  rec.add("record", "l");
  rec.add("x", x);
  rec.add("m", m);
  rec.add("modulus", m < 0 ? -m : m);
  rec.add("l", value);
  rec.add("predicted", predicted);
  rec.add("agree", value == predicted);
  rec.add("d", split.d);
  rec.add("m_prime", split.m_prime);
  rec.add("eps", static_cast<std::int64_t>(eps));
  rec.add("k1", sol.k1);
  rec.add("k2", sol.k2);
  return rec;
}

OutputRecord predict_record(std::int64_t x, std::int64_t m) {
  const SplitDm split = common_divisor_split(x, m);
  const int eps = gauss_sign(m);

  OutputRecord rec;
  rec.add("record", "predict");
  rec.add("x", x);
  rec.add("m", m);
  rec.add("modulus", m < 0 ? -m : m);
  rec.add("d", split.d);
  rec.add("m_prime", split.m_prime);
  rec.add("eps", static_cast<std::int64_t>(eps));
  rec.add("predicted", predict_shifted_product(x, m));
  return rec;
}

OutputRecord chain_record(std::int64_t x, std::int64_t m) {
  const EulerChain chain = euler_chain(x, m);
  OutputRecord rec;
  rec.add("record", "chain");
  rec.add("x", x);
  rec.add("m", m);
  rec.add("s", chain.step_count);
  rec.add("m_s", chain.terminal_modulus);
  std::string steps;
  for (const ChainStep& st : chain.steps) {
    if (!steps.empty()) steps += ';';
    steps += std::to_string(st.divisor) + ':' + std::to_string(st.modulus);
  }
  rec.add("steps", steps);
  return rec;
}

OutputRecord report_record(const CongruenceReport& rep) {
  OutputRecord rec;
  rec.add("record", "report");
  rec.add("theorem", theorem_name(rep.theorem));
  if (rep.x) rec.add("x", *rep.x);
  if (rep.a) rec.add("a", *rep.a);
  rec.add("m", rep.m);
  rec.add("modulus", rep.modulus);
  rec.add("lhs", rep.lhs);
  rec.add("rhs", rep.rhs);
  rec.add("holds", rep.holds);
  rec.add("status", status_name(rep.status));
  rec.add("note", rep.note);
  return rec;
}

OutputRecord scan_summary_record(const ScanRequest& req, const ScanResult& result) {
  OutputRecord rec;
  rec.add("record", "scan_summary");
  rec.add("theorem", theorem_name(req.theorem));
  rec.add("m_range", render_range_value(req.m_range));
  if (req.x_range) {
    rec.add("x_range", render_range_value(*req.x_range));
  } else {
    switch (req.theorem) {
      case TheoremId::LTheorems:
        rec.add("x_range", "0..|m|-1");
        break;
      case TheoremId::EulerGen:
        rec.add("x_range", "0..2|m|");
        break;
      case TheoremId::LagrangeExt:
        rec.add("x_range", "1..2|m|");
        break;
      case TheoremId::MoserGen:
        rec.add("x_range", "0..0");
        break;
      default:
        break;
    }
  }
  if (req.a_range) rec.add("a_range", render_range_value(*req.a_range));
  if (req.theorem == TheoremId::MoserGen) rec.add("variant", variant_name(req.variant));
  rec.add("guard", guard_name(req.guard));
  rec.add("total", result.total_cases);
  rec.add("excluded", result.excluded_cases);
  rec.add("excluded_failures", result.excluded_failures);
  rec.add("violations", static_cast<std::int64_t>(result.violations.size()));
  return rec;
}

OutputRecord suite_record(std::string_view suite, std::int64_t cases,
                          std::int64_t failures) {
  OutputRecord rec;
  rec.add("record", "selfcheck");
  rec.add("suite", suite);
  rec.add("cases", cases);
  rec.add("failures", failures);
  rec.add("passed", failures == 0);
  return rec;
}

}  // namespace reslab::cli
