#pragma once

#include <string>
#include <vector>

namespace ifl {

/// Writes `content` to `path` through a temporary file and a rename.
void write_atomic(const std::string& path, const std::string& content);

/// Creates `dir` (and parents) if needed; returns dir + "/" + name.
std::string output_path(const std::string& dir, const std::string& name);

/// Builds CSV text: header then rows of already formatted cells.
class CsvBuilder {
 public:
  explicit CsvBuilder(std::vector<std::string> header);
  CsvBuilder& cell(const std::string& v);
  CsvBuilder& cell(double v);
  CsvBuilder& cell(long long v);
  CsvBuilder& cell(int v) { return cell(static_cast<long long>(v)); }
  CsvBuilder& cell(bool v) { return cell(std::string(v ? "true" : "false")); }
  void end_row();
  std::string str() const { return text_; }

 private:
  std::size_t columns_;
  std::size_t filled_ = 0;
  std::string text_;
};

}  // namespace ifl
