#include "fleetic/csv.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

#include "fleetic/error.hpp"

namespace fleetic::csv {

std::optional<std::size_t> Table::column(std::string_view name) const {
  for (std::size_t k = 0; k < header.size(); ++k) {
    if (header[k] == name) return k;
  }
  return std::nullopt;
}

std::size_t Table::require_column(std::string_view name) const {
  auto k = column(name);
  if (!k) throw ValidationError("CSV is missing column '" + std::string(name) + "'");
  return *k;
}

std::vector<std::string> split_record(std::string_view line) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  for (std::size_t k = 0; k < line.size(); ++k) {
    const char c = line[k];
    if (quoted) {
      if (c == '"') {
        if (k + 1 < line.size() && line[k + 1] == '"') {
          current += '"';
          ++k;
        } else {
          quoted = false;
        }
      } else {
        current += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  fields.push_back(std::move(current));
  return fields;
}

Table parse(std::istream& in) {
  Table table;
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!have_header) {
      // UTF-8 byte order mark
      if (line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
      table.header = split_record(line);
      have_header = true;
      continue;
    }
    if (line.empty()) continue;
    auto fields = split_record(line);
    if (fields.size() != table.header.size()) {
      throw ValidationError("CSV record " + std::to_string(table.rows.size() + 1) + " has " +
                            std::to_string(fields.size()) + " fields, header has " +
                            std::to_string(table.header.size()));
    }
    table.rows.push_back(std::move(fields));
  }
  if (!have_header) throw ValidationError("CSV has no header row");
  return table;
}

Table read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  return parse(in);
}

std::string escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string format_number(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc{}) return std::to_string(value);
  return std::string(buf, end);
}

void write_record(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t k = 0; k < fields.size(); ++k) {
    if (k) out << ',';
    out << escape(fields[k]);
  }
  out << '\n';
}

}  // namespace fleetic::csv

namespace fleetic::csv {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

double parse_number(std::string_view text, std::string_view what) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ValidationError("cannot parse '" + std::string(text) + "' as a number for " +
                          std::string(what));
  }
  return value;
}

std::int64_t parse_integer(std::string_view text, std::string_view what) {
  text = trim(text);
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ValidationError("cannot parse '" + std::string(text) + "' as an integer for " +
                          std::string(what));
  }
  return value;
}

}  // namespace fleetic::csv
