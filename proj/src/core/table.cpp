#include "core/table.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "core/errors.hpp"

namespace isogeo4 {

void write_csv(const Table& table, std::ostream& out) {
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out << ',';
    out << table.columns[c];
  }
  out << '\n';
  char buf[40];
  for (const auto& row : table.rows) {
    if (row.size() != table.columns.size())
      throw InvalidArgument("write_csv: ragged table row");
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << ',';
      std::snprintf(buf, sizeof(buf), "%.17g", row[c]);
      out << buf;
    }
    out << '\n';
  }
  if (!out) throw IoError("write_csv: stream write failed");
}

std::string to_csv(const Table& table) {
  std::ostringstream oss;
  write_csv(table, oss);
  return oss.str();
}

void write_csv_file(const Table& table, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write_csv(table, out);
  out.close();
  if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace isogeo4
