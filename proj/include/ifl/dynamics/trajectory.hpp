#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ifl {

struct Trajectory {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::uint64_t events = 0;

  std::size_t column(const std::string& name) const;
  double at(std::size_t row, const std::string& name) const { return rows[row][column(name)]; }
};

/// Header line then one row per grid point; values with 17 significant digits.
void write_csv(std::ostream& out, const Trajectory& trajectory);

/// Formats a double with 17 significant digits.
std::string format_double(double v);

}  // namespace ifl
