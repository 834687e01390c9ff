#include "tdpp/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tdpp::report {
namespace {

std::string quote_csv(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string format_number(const char* fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "table") return Format::Table;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "text") return Format::Text;
  throw std::invalid_argument("unknown format '" + name + "'");
}

CsvWriter::CsvWriter(std::vector<std::string> header) { rows_.push_back(std::move(header)); }

void CsvWriter::add_row(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

std::string CsvWriter::str() const {
  std::string out;
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out.push_back(',');
      out += quote_csv(row[i]);
    }
    out += "\r\n";
  }
  return out;
}

std::string number17(double v) { return format_number("%.17g", v); }
std::string number10(double v) { return format_number("%.10g", v); }

nlohmann::json to_json(const ComparisonReport& report, bool with_diffs) {
  nlohmann::json j = {
      {"b", report.b},
      {"a_mag", report.a_mag},
      {"a_phase", report.a_phase},
      {"max_len", report.max_len},
      {"tolerance", report.tolerance},
      {"patterns", report.diffs.size()},
      {"max_abs_diff", report.max_abs_diff},
      {"pass", report.pass},
  };
  if (with_diffs) {
    auto& diffs = j["diffs"] = nlohmann::json::array();
    for (const auto& d : report.diffs)
      diffs.push_back({{"pattern", d.pattern}, {"lhs", d.lhs}, {"rhs", d.rhs}, {"abs_diff", d.abs_diff}});
  }
  return j;
}

nlohmann::json to_json(const RunLengthRow& row) {
  return {{"k", row.k},
          {"det", row.det},
          {"recurrence", row.recurrence},
          {"closed", row.closed},
          {"factor", row.factor}};
}

nlohmann::json to_json(const McEstimate& est) {
  return {{"pattern", est.pattern},     {"samples", est.samples},
          {"frequency", est.frequency}, {"std_error", est.std_error},
          {"exact", est.exact},         {"z", est.z}};
}

nlohmann::json to_json(const LabeledBox& box) {
  return {{"label", box.label}, {"x_lo", box.x_lo}, {"x_hi", box.x_hi},
          {"y_lo", box.y_lo},   {"y_hi", box.y_hi}};
}

nlohmann::json to_json(const Region& region) {
  nlohmann::json boxes = nlohmann::json::array();
  for (const auto& box : region.boxes) boxes.push_back(to_json(box));
  return {{"case", to_string(region.case_tag)},
          {"complemented", region.complemented},
          {"area", region_area(region)},
          {"boxes", std::move(boxes)}};
}

nlohmann::json make_document(nlohmann::json config, std::uint64_t seed, nlohmann::json results,
                             bool pass) {
  return {{"config", std::move(config)},
          {"version", kVersion},
          {"seed", seed},
          {"results", std::move(results)},
          {"pass", pass}};
}

std::string run_length_csv(const std::vector<RunLengthRow>& rows) {
  CsvWriter csv({"k", "det", "recurrence", "closed", "factor"});
  for (const auto& r : rows)
    csv.add_row({std::to_string(r.k), number17(r.det), number17(r.recurrence), number17(r.closed),
                 number17(r.factor)});
  return csv.str();
}

std::string run_length_table_text(const std::vector<RunLengthRow>& rows) {
  std::ostringstream out;
  out << pad("k", 4);
  for (const char* h : {"det", "recurrence", "closed", "factor"}) out << pad(h, 18);
  out << '\n';
  for (const auto& r : rows) {
    out << pad(std::to_string(r.k), 4);
    for (double v : {r.det, r.recurrence, r.closed, r.factor}) out << pad(number10(v), 18);
    out << '\n';
  }
  return out.str();
}

std::string region_csv(const Region& region) {
  CsvWriter csv({"label", "x_lo", "x_hi", "y_lo", "y_hi", "case", "complemented"});
  for (const auto& box : region.boxes)
    csv.add_row({std::to_string(box.label), number17(box.x_lo), number17(box.x_hi),
                 number17(box.y_lo), number17(box.y_hi), to_string(region.case_tag),
                 region.complemented ? "true" : "false"});
  return csv.str();
}

std::string region_table_text(const Region& region) {
  std::ostringstream out;
  out << "case: " << to_string(region.case_tag)
      << "  complemented: " << (region.complemented ? "yes" : "no")
      << "  area: " << number10(region_area(region)) << '\n';
  out << pad("label", 6);
  for (const char* h : {"x_lo", "x_hi", "y_lo", "y_hi"}) out << pad(h, 16);
  out << '\n';
  for (const auto& box : region.boxes) {
    out << pad(std::to_string(box.label), 6);
    for (double v : {box.x_lo, box.x_hi, box.y_lo, box.y_hi}) out << pad(number10(v), 16);
    out << '\n';
  }
  return out.str();
}

std::string comparison_csv(const std::vector<ComparisonReport>& reports) {
  CsvWriter csv({"b", "a_mag", "a_phase", "max_len", "patterns", "max_abs_diff", "pass"});
  for (const auto& r : reports)
    csv.add_row({number17(r.b), number17(r.a_mag), number17(r.a_phase), std::to_string(r.max_len),
                 std::to_string(r.diffs.size()), number17(r.max_abs_diff),
                 r.pass ? "true" : "false"});
  return csv.str();
}

std::string estimates_csv(const std::vector<McEstimate>& estimates) {
  CsvWriter csv({"pattern", "samples", "frequency", "std_error", "exact", "z"});
  for (const auto& e : estimates)
    csv.add_row({e.pattern, std::to_string(e.samples), number17(e.frequency),
                 number17(e.std_error), number17(e.exact), number17(e.z)});
  return csv.str();
}

void emit_report(const std::string& text, const std::string& path, std::ostream& fallback) {
  if (path.empty()) {
    fallback << text;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
  file << text;
  if (!file.flush()) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace tdpp::report
