#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "reslab/report.hpp"
#include "reslab/verify.hpp"

// Flat key=value records and their three renderings: human text (one
// `k=v ...` line), CSV (header + rows), and line-delimited JSON. Field order
// is fixed per record kind and numeric fields are plain base-10, so identical
// invocations produce byte-identical output.

namespace reslab::cli {

enum class Format { Text, Csv, Jsonl };

std::optional<Format> format_from_name(std::string_view name);

using FieldValue = std::variant<std::int64_t, bool, std::string>;

struct OutputRecord {
  std::vector<std::pair<std::string, FieldValue>> fields;

  void add(std::string_view key, std::int64_t v) { fields.emplace_back(key, v); }
  void add(std::string_view key, bool v) { fields.emplace_back(key, v); }
  void add(std::string_view key, const char* v) {
    fields.emplace_back(key, std::string(v));
  }
  void add(std::string_view key, std::string v) {
    fields.emplace_back(key, std::move(v));
  }
  void add(std::string_view key, std::string_view v) {
    fields.emplace_back(key, std::string(v));
  }
};

std::string value_text(const FieldValue& value);

/// Renders one record as a text line (no trailing newline).
std::string render_text(const OutputRecord& rec);

// Streams records to an output in one format. For CSV a header is written
// before the first row (and again if a record with different keys appears).
class RecordWriter {
 public:
  RecordWriter(std::ostream& out, Format format) : out_(&out), format_(format) {}

  void write(const OutputRecord& rec);

 private:
  std::ostream* out_;
  Format format_;
  std::vector<std::string> csv_header_;
};

// Record builders for each output kind.
OutputRecord classify_record(std::int64_t m);
OutputRecord residues_record(std::int64_t m);
OutputRecord shifted_product_record(std::int64_t x, std::int64_t m);
OutputRecord predict_record(std::int64_t x, std::int64_t m);
OutputRecord chain_record(std::int64_t x, std::int64_t m);
OutputRecord report_record(const CongruenceReport& rep);
OutputRecord scan_summary_record(const ScanRequest& req, const ScanResult& result);
OutputRecord suite_record(std::string_view suite, std::int64_t cases,
                          std::int64_t failures);

}  // namespace reslab::cli
