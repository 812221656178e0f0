#include "ifl/dynamics/trajectory.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace ifl {

std::size_t Trajectory::column(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == name) return i;
  }
  throw std::out_of_range("trajectory: no column '" + name + "'");
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(std::ostream& out, const Trajectory& trajectory) {
  for (std::size_t i = 0; i < trajectory.columns.size(); ++i) {
    out << (i ? "," : "") << trajectory.columns[i];
  }
  out << '\n';
  for (const auto& row : trajectory.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_double(row[i]);
    out << '\n';
  }
}

}  // namespace ifl
