#include "ifl/harness/output.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <unistd.h>

#include "ifl/dynamics/trajectory.hpp"

namespace ifl {

void write_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + tmp + "'");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write failed for '" + tmp + "'");
  }
  std::filesystem::rename(tmp, path);
}

std::string output_path(const std::string& dir, const std::string& name) {
  std::filesystem::create_directories(dir);
  return (std::filesystem::path(dir) / name).string();
}

CsvBuilder::CsvBuilder(std::vector<std::string> header) : columns_(header.size()) {
  for (std::size_t i = 0; i < header.size(); ++i) text_ += (i ? "," : "") + header[i];
  text_ += '\n';
}

CsvBuilder& CsvBuilder::cell(const std::string& v) {
  if (filled_ == columns_) throw std::logic_error("csv: too many cells in row");
  if (filled_++) text_ += ',';
  text_ += v;
  return *this;
}

CsvBuilder& CsvBuilder::cell(double v) { return cell(format_double(v)); }
CsvBuilder& CsvBuilder::cell(long long v) { return cell(std::to_string(v)); }

void CsvBuilder::end_row() {
  if (filled_ != columns_) throw std::logic_error("csv: row has " + std::to_string(filled_) + " cells");
  text_ += '\n';
  filled_ = 0;
}

}  // namespace ifl
