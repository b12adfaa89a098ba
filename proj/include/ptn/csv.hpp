#pragma once

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ptn/error.hpp"

namespace ptn::csv {

struct Row {
  std::size_t line = 0;  // 1-based line where the record starts
  std::vector<std::string> fields;
};

/// Splits comma-separated text with double-quote quoting. Quoted fields may
/// contain commas, doubled quotes and line breaks. CRLF and a leading UTF-8
/// BOM are accepted. Blank lines are skipped.
inline std::vector<Row> parse(std::string_view text, const std::string& source = "<input>") {
  if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);

  std::vector<Row> rows;
  Row row;
  std::string field;
  bool in_quotes = false;
  bool field_was_quoted = false;
  std::size_t line = 1;
  row.line = 1;

  auto end_field = [&] {
    row.fields.push_back(std::move(field));
    field.clear();
    field_was_quoted = false;
  };
  auto end_row = [&] {
    end_field();
    bool blank = row.fields.size() == 1 && row.fields[0].empty();
    if (!blank) rows.push_back(std::move(row));
    row = Row{};
    row.line = line;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!field.empty() || field_was_quoted)
          throw Error(ErrorCode::MalformedRow, source + ":" + std::to_string(line) + ": stray quote");
        in_quotes = true;
        field_was_quoted = true;
        break;
      case ',':
        end_field();
        break;
      case '\r':
        if (i + 1 < text.size() && text[i + 1] == '\n') break;
        ++line;
        end_row();
        break;
      case '\n':
        ++line;
        end_row();
        break;
      default:
        field.push_back(c);
    }
  }
  if (in_quotes) throw Error(ErrorCode::MalformedRow, source + ":" + std::to_string(row.line) + ": unterminated quote");
  if (!field.empty() || field_was_quoted || !row.fields.empty()) end_row();
  return rows;
}

/// A CSV file with a header row; columns are looked up by name.
class Table {
 public:
  Table(std::string source, std::vector<Row> rows) : source_(std::move(source)) {
    if (rows.empty()) throw Error(ErrorCode::MalformedRow, source_ + ":1: missing header row");
    for (std::size_t i = 0; i < rows[0].fields.size(); ++i) {
      std::string name = rows[0].fields[i];
      while (!name.empty() && (name.back() == ' ' || name.back() == '\t')) name.pop_back();
      while (!name.empty() && (name.front() == ' ' || name.front() == '\t')) name.erase(name.begin());
      columns_.emplace(std::move(name), i);
    }
    rows_.assign(std::make_move_iterator(rows.begin() + 1), std::make_move_iterator(rows.end()));
  }

  static Table read(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::MissingFile, path.string() + ": cannot open");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return Table(path.filename().string(), parse(buffer.str(), path.filename().string()));
  }

  const std::string& source() const { return source_; }
  const std::vector<Row>& rows() const { return rows_; }

  std::optional<std::size_t> column(const std::string& name) const {
    auto it = columns_.find(name);
    if (it == columns_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t require(const std::string& name) const {
    auto index = column(name);
    if (!index) throw Error(ErrorCode::MalformedRow, source_ + ":1: missing required column '" + name + "'");
    return *index;
  }

  /// Field value, empty when the row is short.
  static std::string_view get(const Row& row, std::size_t index) {
    return index < row.fields.size() ? std::string_view(row.fields[index]) : std::string_view();
  }

 private:
  std::string source_;
  std::unordered_map<std::string, std::size_t> columns_;
  std::vector<Row> rows_;
};

}  // namespace ptn::csv
