#ifndef ROBUSTWALD_DATASET_HPP
#define ROBUSTWALD_DATASET_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "robustwald/linalg.hpp"

namespace rw {

// Rectangular numeric table read from CSV: comma separator, mandatory header
// row, '.' decimal point, UTF-8. Missing or non-numeric cells are an error
// reported with their row index.
struct Dataset {
  std::vector<std::string> columns;
  std::vector<Vector> rows;

  Matrix as_matrix() const;
};

Dataset read_csv(const std::string& path);
Dataset parse_csv(std::istream& in, const std::string& origin);

void write_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<Vector>& rows, int round_digits = -1);

}  // namespace rw

#endif
