#include "polya/output.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

#include <nlohmann/json.hpp>

#include "polya/errors.hpp"

namespace polya::io {

namespace {

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string json_string(const std::string& text) { return nlohmann::json(text).dump(); }

std::string json_cell(const Cell& cell) {
  if (std::holds_alternative<std::monostate>(cell)) return "null";
  if (const auto* d = std::get_if<double>(&cell)) {
    return std::isfinite(*d) ? format_double(*d) : "null";
  }
  if (const auto* s = std::get_if<std::string>(&cell)) return json_string(*s);
  return format_cell(cell);
}

}  // namespace

Format parse_format(const std::string& text) {
  if (text == "csv") return Format::Csv;
  if (text == "json") return Format::Json;
  throw DomainError("unknown output format '" + text + "'");
}

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string format_cell(const Cell& cell) {
  struct Visitor {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(long long v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_double(v); }
    std::string operator()(const std::string& v) const { return v; }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
  };
  return std::visit(Visitor{}, cell);
}

void write_csv(const OutputRecord& record, std::ostream& out) {
  out << "# schema=" << record.schema_version << '\n';
  for (const auto& [key, value] : record.summary) {
    out << "# " << key << '=' << format_cell(value) << '\n';
  }
  for (std::size_t i = 0; i < record.columns.size(); ++i) {
    if (i > 0) out << ',';
    out << csv_field(record.columns[i]);
  }
  out << '\n';
  for (const auto& row : record.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out << ',';
      out << csv_field(format_cell(row[i]));
    }
    out << '\n';
  }
}

void write_json(const OutputRecord& record, std::ostream& out) {
  out << "{\"schema_version\":" << json_string(record.schema_version)
      << ",\"command\":" << json_string(record.command) << ",\"inputs\":{";
  for (std::size_t i = 0; i < record.inputs.size(); ++i) {
    if (i > 0) out << ',';
    out << json_string(record.inputs[i].first) << ':' << json_string(record.inputs[i].second);
  }
  out << "},\"columns\":[";
  for (std::size_t i = 0; i < record.columns.size(); ++i) {
    if (i > 0) out << ',';
    out << json_string(record.columns[i]);
  }
  out << "],\"rows\":[";
  for (std::size_t r = 0; r < record.rows.size(); ++r) {
    if (r > 0) out << ',';
    out << '{';
    const auto& row = record.rows[r];
    for (std::size_t i = 0; i < row.size() && i < record.columns.size(); ++i) {
      if (i > 0) out << ',';
      out << json_string(record.columns[i]) << ':' << json_cell(row[i]);
    }
    out << '}';
  }
  out << "],\"summary\":{";
  for (std::size_t i = 0; i < record.summary.size(); ++i) {
    if (i > 0) out << ',';
    out << json_string(record.summary[i].first) << ':' << json_cell(record.summary[i].second);
  }
  out << "}}\n";
}

void write(const OutputRecord& record, Format format, std::ostream& out) {
  if (format == Format::Csv) {
    write_csv(record, out);
  } else {
    write_json(record, out);
  }
}

}  // namespace polya::io
