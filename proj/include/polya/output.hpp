#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace polya::io {

inline constexpr const char* kSchemaVersion = "1";

/// Empty, integer, real, text or flag.
using Cell = std::variant<std::monostate, long long, double, std::string, bool>;

/// One CLI invocation's machine-readable result: a flat table plus a few named
/// summary values.
struct OutputRecord {
  std::string schema_version = kSchemaVersion;
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, Cell>> summary;
};

enum class Format { Csv, Json };

Format parse_format(const std::string& text);

/// 17 significant digits, '.' decimal separator, independent of the C locale.
std::string format_double(double value);

std::string format_cell(const Cell& cell);

/// CSV: a "# schema=<v>" line, one "# key=value" line per summary entry, a header
/// row, then the rows. Fields containing ',' or '"' are quoted.
void write_csv(const OutputRecord& record, std::ostream& out);

/// A single JSON object with schema_version, command, inputs, columns, rows (one
/// object per row) and summary.
void write_json(const OutputRecord& record, std::ostream& out);

void write(const OutputRecord& record, Format format, std::ostream& out);

}  // namespace polya::io
