#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace infosel::csv {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// RFC-4180: comma separated, optional double quotes with "" escapes, quoted
// fields may span lines, CRLF or LF record ends. A leading UTF-8 BOM is
// skipped. Throws Error(kSchema) on ragged rows or unterminated quotes.
Table read(std::istream& in);

std::string quote(std::string_view field);
void write_row(std::ostream& out, const std::vector<std::string>& fields);

}  // namespace infosel::csv
