#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "varspace/grid.hpp"

namespace varspace::cli {

/// Malformed or mismatched input file; the message carries line and column when known.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * Signal text format.
 *
 * 1D: one sample per line, "re" or "re,im". 2D: N lines of N comma-separated
 * real values, row-major. An optional first line "# dim=<d> n=<N>" must match
 * the grid; other lines starting with '#' and blank lines are ignored.
 */
GridFunction load_signal(const std::string& path, const Grid& grid);
GridFunction parse_signal(const std::string& text, const Grid& grid);

/// Writes the header and shortest round-trip decimal forms; 2D signals must be real.
void save_signal(const std::string& path, const GridFunction& f);
std::string format_signal(const GridFunction& f);

/// Real table in the signal format (for @table.csv exponent and weight data).
std::vector<double> load_table(const std::string& path, const Grid& grid);

/// Shortest decimal that parses back to exactly v.
std::string format_double(double v);

}  // namespace varspace::cli
