#pragma once
// Rectangular numeric tables and the CSV dialect used for every tabular
// artifact: header row, '.' decimal separator, 17 significant digits
// (round-trip exact for doubles), '\n' line endings.

#include <iosfwd>
#include <string>
#include <vector>

namespace isogeo4 {

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

void write_csv(const Table& table, std::ostream& out);
std::string to_csv(const Table& table);
void write_csv_file(const Table& table, const std::string& path);  // throws IoError

}  // namespace isogeo4
