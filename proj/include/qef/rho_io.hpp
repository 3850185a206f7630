#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include <json.hpp>

#include "qef/mixed_state.hpp"

namespace qef {

/// Reads a density matrix from the JSON format
///   {"rho": [[[re, im], ... 4 cells] ... 4 rows]}
/// with rows and columns in the basis order |00>, |01>, |10>, |11>.
/// Structural problems raise ParseError; the physical invariants are then
/// checked by validate_density_matrix, whose errors name the violated
/// invariant and its measured magnitude.
inline DensityMatrix<double> load_density_matrix(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!doc.is_object() || !doc.contains("rho")) {
    throw ParseError("expected a top-level object with key \"rho\"");
  }
  const auto& rho = doc["rho"];
  if (!rho.is_array() || rho.size() != 4) {
    throw ParseError("\"rho\" must be an array of 4 rows");
  }
  Matrix4cd m;
  for (int i = 0; i < 4; ++i) {
    const auto& row = rho[static_cast<size_t>(i)];
    if (!row.is_array() || row.size() != 4) {
      throw ParseError("row " + std::to_string(i) + " of \"rho\" must have 4 cells");
    }
    for (int j = 0; j < 4; ++j) {
      const auto& cell = row[static_cast<size_t>(j)];
      if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() ||
          !cell[1].is_number()) {
        throw ParseError("entry (" + std::to_string(i) + "," + std::to_string(j) +
                         ") must be a [re, im] pair of numbers");
      }
      m(i, j) = std::complex<double>(cell[0].get<double>(), cell[1].get<double>());
    }
  }
  return validate_density_matrix(m);
}

inline DensityMatrix<double> load_density_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return load_density_matrix(in);
}

inline void write_density_matrix(std::ostream& out, const Matrix4cd& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < 4; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < 4; ++j) {
      row.push_back({m(i, j).real(), m(i, j).imag()});
    }
    rows.push_back(row);
  }
  out << nlohmann::json{{"rho", rows}}.dump(2) << '\n';
}

}  // namespace qef
