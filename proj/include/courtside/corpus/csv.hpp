#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace courtside::corpus {

// RFC-4180 CSV: comma separated, double-quote quoting, doubled quotes inside
// quoted fields, CRLF or LF records.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  // Index of a header column; throws DataError when absent.
  std::size_t column(std::string_view name) const;
  bool has_column(std::string_view name) const;
};

CsvTable read_csv(std::istream& in, const std::string& source_name = "<stream>");
CsvTable read_csv_file(const std::filesystem::path& path);

std::string csv_escape(std::string_view field);
void write_csv_row(std::ostream& out, const std::vector<std::string>& fields);

// Shortest text that reads back as the same double.
std::string format_double(double value);
double parse_double(std::string_view text);

}  // namespace courtside::corpus
