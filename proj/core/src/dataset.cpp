#include "robustwald/dataset.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "robustwald/errors.hpp"

namespace rw {
namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.push_back("");
  return cells;
}

std::string strip(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

Matrix Dataset::as_matrix() const {
  Matrix m(rows.size(), columns.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < columns.size(); ++j) m(i, j) = rows[i][j];
  return m;
}

Dataset parse_csv(std::istream& in, const std::string& origin) {
  Dataset ds;
  std::string line;
  if (!std::getline(in, line)) {
    throw DataError(origin + ": empty file (header row required)");
  }
  for (const std::string& c : split_line(line)) ds.columns.push_back(strip(c));
  if (ds.columns.empty()) {
    throw DataError(origin + ": header row has no columns");
  }
  std::size_t row_index = 0;
  while (std::getline(in, line)) {
    ++row_index;
    if (strip(line).empty()) continue;
    const std::vector<std::string> cells = split_line(line);
    if (cells.size() != ds.columns.size()) {
      throw DataError(origin + ": row " + std::to_string(row_index) + " has " +
                      std::to_string(cells.size()) + " cells, expected " +
                      std::to_string(ds.columns.size()));
    }
    Vector row(cells.size());
    for (std::size_t j = 0; j < cells.size(); ++j) {
      const std::string cell = strip(cells[j]);
      if (cell.empty()) {
        throw DataError(origin + ": missing value at row " +
                        std::to_string(row_index) + ", column " + ds.columns[j]);
      }
      std::size_t pos = 0;
      double v;
      try {
        v = std::stod(cell, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != cell.size()) {
        throw DataError(origin + ": non-numeric value '" + cell + "' at row " +
                        std::to_string(row_index) + ", column " + ds.columns[j]);
      }
      row[j] = v;
    }
    ds.rows.push_back(std::move(row));
  }
  if (ds.rows.empty()) {
    throw DataError(origin + ": no data rows");
  }
  return ds;
}

Dataset read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path);
  return parse_csv(in, path);
}

void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<Vector>& rows, int round_digits) {
  for (std::size_t j = 0; j < header.size(); ++j) {
    out << (j ? "," : "") << header[j];
  }
  out << "\n";
  for (const Vector& row : rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out << ",";
      if (round_digits >= 0) {
        out << std::fixed << std::setprecision(round_digits) << row[j]
            << std::defaultfloat;
      } else {
        out << std::setprecision(17) << row[j];
      }
    }
    out << "\n";
  }
}

}  // namespace rw
