#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "ifl/core/height_config.hpp"

namespace ifl {

/// Malformed configuration text; `column` is the 0-based offset of the offending character.
class ParseError : public ValidationError {
 public:
  ParseError(const std::string& what, std::size_t column)
      : ValidationError(what + " (column " + std::to_string(column) + ")"), column_(column) {}
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

/// `N=<int> anchor=<int> slopes=<bitstring>`
std::string to_text(const HeightConfig& config);
HeightConfig parse_config(std::string_view line);

}  // namespace ifl
