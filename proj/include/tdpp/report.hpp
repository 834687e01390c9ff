#pragma once

#include <json.hpp>
#include <ostream>
#include <string>
#include <vector>

#include "tdpp/blockfactor.hpp"
#include "tdpp/verify.hpp"

namespace tdpp::report {

inline constexpr const char* kVersion = "0.1.0";

enum class Format { Table, Json, Csv, Text };

Format parse_format(const std::string& name);

/// RFC-4180 rows: fields with commas, quotes or line breaks are quoted.
class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> header);
  void add_row(std::vector<std::string> row);
  std::string str() const;

 private:
  std::vector<std::vector<std::string>> rows_;
};

/// %.17g, enough to round-trip a double.
std::string number17(double v);
/// %.10g for human-facing tables.
std::string number10(double v);

nlohmann::json to_json(const ComparisonReport& report, bool with_diffs = false);
nlohmann::json to_json(const RunLengthRow& row);
nlohmann::json to_json(const McEstimate& est);
nlohmann::json to_json(const LabeledBox& box);
nlohmann::json to_json(const Region& region);

/// Top-level report: config, version, seed, results, pass.
nlohmann::json make_document(nlohmann::json config, std::uint64_t seed, nlohmann::json results,
                             bool pass);

std::string run_length_csv(const std::vector<RunLengthRow>& rows);
std::string run_length_table_text(const std::vector<RunLengthRow>& rows);
std::string region_csv(const Region& region);
std::string region_table_text(const Region& region);
std::string comparison_csv(const std::vector<ComparisonReport>& reports);
std::string estimates_csv(const std::vector<McEstimate>& estimates);

/// Writes to `path`, or to `fallback` when the path is empty. Throws
/// std::runtime_error naming the path on I/O failure.
void emit_report(const std::string& text, const std::string& path, std::ostream& fallback);

}  // namespace tdpp::report
