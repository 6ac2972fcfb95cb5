#pragma once

// Plain CSV fixture format for integer matrices: one row per line,
// comma-separated signed decimals, no header.

#include "magic4/int_matrix.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace magic4 {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline IntMatrix read_csv_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("missing fixture: " + path);
  std::vector<std::vector<Int>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<Int> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      size_t b = cell.find_first_not_of(" \t\r");
      size_t e = cell.find_last_not_of(" \t\r");
      if (b == std::string::npos) throw ConfigError("empty cell in " + path);
      row.emplace_back(cell.substr(b, e - b + 1));
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw ConfigError("ragged rows in " + path);
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ConfigError("empty fixture: " + path);
  IntMatrix m((int)rows.size(), (int)rows.front().size());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  return m;
}

inline void write_csv_matrix(const std::string& path, const IntMatrix& m) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write: " + path);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      out << m(i, j).str();
      if (j + 1 < m.cols()) out << ",";
    }
    out << "\n";
  }
}

}  // namespace magic4
