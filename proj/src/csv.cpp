#include "csv.hpp"


#include "infosel/error.hpp"

namespace infosel::csv {
namespace {

// Splits the stream into records; returns false at end of input.
bool next_record(std::istream& in, std::vector<std::string>& fields, std::size_t& line) {
  fields.clear();
  if (in.peek() == std::char_traits<char>::eof()) return false;
  std::string field;
  bool quoted = false;
  bool field_was_quoted = false;
  const std::size_t start_line = line;
  for (;;) {
    int ch = in.get();
    if (ch == std::char_traits<char>::eof()) {
      if (quoted)
        fail(ErrorCode::kSchema,
             "unterminated quoted field starting on line " + std::to_string(start_line));
      fields.push_back(std::move(field));
      return true;
    }
    char c = static_cast<char>(ch);
    if (quoted) {
      if (c == '"') {
        if (in.peek() == '"') {
          in.get();
          field.push_back('"');
        } else {
          quoted = false;
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
          fail(ErrorCode::kSchema, "stray quote on line " + std::to_string(line));
        quoted = true;
        field_was_quoted = true;
        break;
      case ',':
        fields.push_back(std::move(field));
        field.clear();
        field_was_quoted = false;
        break;
      case '\r':
        if (in.peek() == '\n') in.get();
        [[fallthrough]];
      case '\n':
        ++line;
        fields.push_back(std::move(field));
        return true;
      default:
        if (field_was_quoted)
          fail(ErrorCode::kSchema, "text after closing quote on line " + std::to_string(line));
        field.push_back(c);
    }
  }
}

}  // namespace

Table read(std::istream& in) {
  Table table;
  if (in.peek() == 0xEF) {
    char bom[3];
    in.read(bom, 3);
    if (!(bom[0] == '\xEF' && bom[1] == '\xBB' && bom[2] == '\xBF'))
      fail(ErrorCode::kSchema, "invalid byte order mark");
  }
  std::size_t line = 1;
  std::vector<std::string> fields;
  if (!next_record(in, fields, line)) fail(ErrorCode::kSchema, "missing header row");
  table.header = fields;
  while (next_record(in, fields, line)) {
    if (fields.size() == 1 && fields[0].empty()) continue;  // blank line
    if (fields.size() != table.header.size())
      fail(ErrorCode::kSchema, "ragged row ending on line " + std::to_string(line - 1) +
                                   ": expected " + std::to_string(table.header.size()) +
                                   " fields, got " + std::to_string(fields.size()));
    table.rows.push_back(fields);
  }
  return table;
}

std::string quote(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

void write_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out << ',';
    out << quote(fields[i]);
  }
  out << '\n';
}

}  // namespace infosel::csv
