#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fleetic::csv {

/// A comma-separated file with a mandatory header row.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Column position by name, if present.
  std::optional<std::size_t> column(std::string_view name) const;
  /// Column position by name; throws ValidationError when absent.
  std::size_t require_column(std::string_view name) const;
};

/// Splits one record, honouring double-quoted fields.
std::vector<std::string> split_record(std::string_view line);

Table parse(std::istream& in);
Table read_file(const std::filesystem::path& path);

/// Quotes a field when it contains a delimiter, quote or line break.
std::string escape(std::string_view field);

/// Shortest decimal representation that round-trips the value.
std::string format_number(double value);

void write_record(std::ostream& out, const std::vector<std::string>& fields);

}  // namespace fleetic::csv

namespace fleetic::csv {

/// Parses a decimal number; throws ValidationError mentioning `what`.
double parse_number(std::string_view text, std::string_view what);
std::int64_t parse_integer(std::string_view text, std::string_view what);

}  // namespace fleetic::csv
