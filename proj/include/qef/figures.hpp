#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "qef/measures.hpp"
#include "qef/thermal.hpp"

namespace qef {

/// A uniform grid: `points` samples from start to stop inclusive.
struct SweepSpec {
  double start = 0.0;
  double stop = 1.0;
  int points = 201;
};

inline void check_sweep_spec(const SweepSpec& spec) {
  if (!std::isfinite(spec.start) || !std::isfinite(spec.stop)) {
    throw BadSpec("sweep bounds must be finite");
  }
  if (!(spec.start < spec.stop)) throw BadSpec("sweep requires start < stop");
  if (spec.points < 2) throw BadSpec("sweep requires at least 2 points");
}

inline std::vector<double> linspace(const SweepSpec& spec) {
  check_sweep_spec(spec);
  std::vector<double> grid(static_cast<size_t>(spec.points));
  const double step = (spec.stop - spec.start) / (spec.points - 1);
  for (int i = 0; i < spec.points; ++i) grid[static_cast<size_t>(i)] = spec.start + i * step;
  grid.back() = spec.stop;
  return grid;
}

/// Columnar data behind one figure; empty cells mark undefined values.
struct FigureTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::optional<double>>> rows;
};

/// Default grids: figure 1 sweeps C over [0, 1], figure 2 over [0.005, 1]
/// (the relative fluctuation diverges at C = 0), figures 3 and 4 sweep
/// tau/tau_e over [0.01, 1.2] to show the vanishing region past tau_e.
inline SweepSpec default_figure_spec(int which) {
  switch (which) {
    case 1: return {0.0, 1.0, 201};
    case 2: return {0.005, 1.0, 201};
    case 3:
    case 4: return {0.01, 1.2, 201};
    default: throw BadSpec("figure index must be 1, 2, 3 or 4");
  }
}

/// Dataset of one figure: 1 = E and dE versus C, 2 = relE versus C,
/// 3 = E and dE versus tau/tau_e, 4 = relE versus tau/tau_e
/// (antiferromagnetic dimer, j = -1).
inline FigureTable figure_table(int which, const SweepSpec& spec) {
  check_sweep_spec(spec);
  FigureTable table;
  switch (which) {
    case 1:
    case 2: {
      if (spec.start < 0.0 || spec.stop > 1.0) {
        throw BadSpec("concurrence sweep must stay inside [0, 1]");
      }
      if (which == 2 && spec.start <= 0.0) {
        throw BadSpec("relative-fluctuation sweep must exclude C = 0");
      }
      table.header = which == 1 ? std::vector<std::string>{"C", "E", "dE"}
                                : std::vector<std::string>{"C", "relE"};
      for (double c : linspace(spec)) {
        if (which == 1) {
          table.rows.push_back({c, entanglement(c), fluctuation(c)});
        } else {
          const auto rel = relative_fluctuation(c);
          table.rows.push_back({c, rel ? std::optional<double>(*rel) : std::nullopt});
        }
      }
      break;
    }
    case 3:
    case 4: {
      if (spec.start <= 0.0) throw BadSpec("temperature sweep requires tau/tau_e > 0");
      table.header = which == 3
                         ? std::vector<std::string>{"t_over_te", "E", "dE"}
                         : std::vector<std::string>{"t_over_te", "relE"};
      const double te = entanglement_temperature(-1.0);
      std::vector<double> taus;
      for (double t : linspace(spec)) taus.push_back(t * te);
      for (const auto& pt : thermal_sweep(-1.0, std::span<const double>(taus))) {
        if (which == 3) {
          table.rows.push_back({pt.tau_over_te, pt.e, pt.delta_e});
        } else {
          table.rows.push_back({pt.tau_over_te,
                                pt.rel ? std::optional<double>(*pt.rel) : std::nullopt});
        }
      }
      break;
    }
    default:
      throw BadSpec("figure index must be 1, 2, 3 or 4");
  }
  return table;
}

/// Numeric CSV cell: 12 significant digits, '.' decimal separator.
inline std::string csv_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline void write_csv(std::ostream& out, const FigureTable& table) {
  for (size_t i = 0; i < table.header.size(); ++i) {
    out << (i ? "," : "") << table.header[i];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      if (row[i]) out << csv_value(*row[i]);
    }
    out << '\n';
  }
}

inline void write_csv_file(const std::string& path, const FigureTable& table) {
  std::ofstream out(path);
  if (!out) throw UnwritablePath(path);
  write_csv(out, table);
  out.flush();
  if (!out) throw UnwritablePath(path);
}

inline FigureTable parse_csv(std::istream& in) {
  FigureTable table;
  std::string line;
  if (!std::getline(in, line)) throw ParseError("CSV input is empty");
  std::stringstream header(line);
  for (std::string cell; std::getline(header, cell, ',');) table.header.push_back(cell);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::optional<double>> row;
    size_t begin = 0;
    while (true) {
      const size_t comma = line.find(',', begin);
      const std::string cell = line.substr(begin, comma - begin);
      if (cell.empty()) {
        row.push_back(std::nullopt);
      } else {
        try {
          row.push_back(std::stod(cell));
        } catch (const std::exception&) {
          throw ParseError("CSV cell '" + cell + "' is not a number");
        }
      }
      if (comma == std::string::npos) break;
      begin = comma + 1;
    }
    if (row.size() != table.header.size()) {
      throw ParseError("CSV row has " + std::to_string(row.size()) +
                       " cells, header has " + std::to_string(table.header.size()));
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace qef
